"""Structured, deterministic reports and the Sweedler-notation trace."""

from __future__ import annotations

import json

from .analysis import Section
from .checks import FAIL, PASS

# identities rendered for failing checks in trace mode
SWEEDLER = {
    "coassociativity": "c(1)(1) ⊗ c(1)(2) ⊗ c(2) = c(1) ⊗ c(2)(1) ⊗ c(2)(2)",
    "left counit law": "ε(c(1)) c(2) = c",
    "right counit law": "c(1) ε(c(2)) = c",
    "coproduct bilinear": "Δ(a c a') = a c(1) ⊗ c(2) a'",
    "counit bilinear": "ε(a c a') = a ε(c) a'",
    "cointegral colinearity": "γ(c ⊗ c'(1)) c'(2) = c(1) γ(c(2) ⊗ c')",
    "cointegral normalisation": "γ(c(1) ⊗ c(2)) = ε(c)",
    "retraction of coproduct": "c(1) γ(c(2) ⊗ c(3)) = c",
    "right colinearity": "Δ(π(c ⊗ c')) = π(c ⊗ c'(1)) ⊗ c'(2)",
    "left colinearity": "Δ(π(c ⊗ c')) = c(1) ⊗ π(c(2) ⊗ c')",
    "alternative products agree": "γ(c ⊗ c'(1)) c'(2) = c(1) γ(c(2) ⊗ c')",
    "associativity": "(c c') c'' = c (c' c'')",
    "grouplike": "Δ(g) = g ⊗ g, ε(g) = 1",
    "e central": "a e = e a",
    "counit of e is one": "ε(e) = 1",
}


def _identity(name: str) -> str | None:
    base = name.split(": ")[-1]
    for key, formula in SWEEDLER.items():
        if base.startswith(key) or base.endswith(key):
            return formula
    return None


def trace_line(section: str, check) -> str:
    """A one-line audit of a failing check."""
    d = check.detail or {}
    formula = _identity(check.name)
    head = f"[{section}] {check.name}"
    if formula:
        head += f": {formula}"
    if "at" in d and "lhs" in d:
        return f"{head} fails at {d['at']}: lhs = {d['lhs']}, rhs = {d['rhs']}"
    if d:
        return f"{head} fails ({', '.join(f'{k}={v}' for k, v in sorted(d.items()))})"
    return f"{head} fails"


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def build_report(command: str, target: str, sections: list[Section], summary: dict | None = None, trace: bool = False) -> dict:
    failed = [(s.name, c) for s in sections for c in s.checks if c.status == FAIL]
    rep = {
        "command": command,
        "target": target,
        "status": FAIL if failed else PASS,
        "sections": [
            {
                "name": s.name,
                "checks": [_plain(c.to_dict()) for c in s.checks],
                **({"data": _plain(s.data)} if s.data else {}),
            }
            for s in sections
        ],
    }
    if summary:
        rep["summary"] = _plain(summary)
    if trace:
        rep["trace"] = [trace_line(name, c) for name, c in failed]
    return rep


def to_json(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False)


def to_text(rep: dict) -> str:
    lines = [f"{rep['command']} {rep['target']}: {rep['status']}"]
    for s in rep["sections"]:
        lines.append(f"  {s['name']}")
        for c in s["checks"]:
            extra = ""
            if c.get("detail") and c["status"] != PASS:
                extra = "  " + ", ".join(f"{k}={v}" for k, v in sorted(c["detail"].items()))
            lines.append(f"    {c['status']:<12} {c['name']}{extra}")
        for k, v in sorted(s.get("data", {}).items()):
            lines.append(f"    {'data':<12} {k} = {v}")
    for k, v in sorted(rep.get("summary", {}).items()):
        lines.append(f"  {k}: {v}")
    for t in rep.get("trace", []):
        lines.append(f"  trace {t}")
    return "\n".join(lines)
