"""Pass/fail records shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .exact import Field, Mat

PASS = "pass"
FAIL = "fail"
INFEASIBLE = "infeasible"
INAPPLICABLE = "inapplicable"


@dataclass
class Check:
    """Outcome of one verified identity or decision.

    ``status`` is one of ``pass``, ``fail``, ``infeasible`` or
    ``inapplicable``; only ``pass`` is truthy.
    """

    name: str
    status: str = PASS
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, **({"detail": self.detail} if self.detail else {})}


def format_vector(fld: Field, v: Sequence, label: Callable[[int], str] | None = None) -> str:
    """Sparse rendering ``2·e0 + 1/2·e3`` of a coordinate vector."""
    label = label or (lambda i: f"b{i}")
    terms = []
    for i, x in enumerate(v):
        if not x:
            continue
        s = fld.format(x)
        terms.append(label(i) if s == "1" else f"{s}·{label(i)}")
    return " + ".join(terms) if terms else "0"


def compare(name: str, lhs: Mat, rhs: Mat, source_label=None, target_label=None) -> Check:
    """Check ``lhs == rhs``; on failure record the first basis vector where they differ."""
    if lhs.shape != rhs.shape:
        return Check(name, FAIL, {"reason": f"shape {lhs.shape} != {rhs.shape}"})
    if lhs == rhs:
        return Check(name)
    diff = lhs - rhs
    bad = min(j for r in diff.rows for j in r)
    src = source_label(bad) if source_label else f"b{bad}"
    f = lhs.field
    return Check(
        name,
        FAIL,
        {
            "at": src,
            "index": bad,
            "lhs": format_vector(f, lhs.column(bad), target_label),
            "rhs": format_vector(f, rhs.column(bad), target_label),
        },
    )


def all_passed(checks) -> bool:
    return all(bool(c) for c in checks)
