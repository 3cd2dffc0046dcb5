"""Ring extensions ``B -> A`` given by an embedding matrix, with an optional conditional expectation."""

from __future__ import annotations

from .checks import FAIL, Check
from .exact import Mat
from .findim import Algebra, Bimodule, is_module_map, restrict


class RingExtension:
    """An algebra map ``B -> A`` (matrix ``embed`` of shape dim A x dim B)."""

    def __init__(self, base: Algebra, total: Algebra, embed: Mat, expectation: Mat | None = None, name: str = "ext"):
        if base.field != total.field:
            raise ValueError("base and total algebras live over different fields")
        if embed.shape != (total.dim, base.dim):
            raise ValueError(f"embedding of shape {embed.shape}, expected {(total.dim, base.dim)}")
        if expectation is not None and expectation.shape != (base.dim, total.dim):
            raise ValueError(f"expectation of shape {expectation.shape}, expected {(base.dim, total.dim)}")
        self.base = base
        self.total = total
        self.embed = embed
        self.expectation = expectation
        self.name = name
        self._mods: dict = {}

    @property
    def field(self):
        return self.total.field

    def __repr__(self):
        return f"RingExtension({self.base.name} -> {self.total.name})"

    def module(self, left: str, right: str) -> Bimodule:
        """``A`` viewed as a bimodule; ``left``/``right`` are each 'A', 'B' or 'k'."""
        key = (left, right)
        if key not in self._mods:
            a = self.total
            k = Algebra.ground(a.field)
            reg = a.regular()
            if left == "k":
                reg = a.right_regular()
            if right == "k":
                reg = a.left_regular() if left != "k" else Bimodule(
                    k, k, a.dim, (Mat.identity(a.field, a.dim),), (Mat.identity(a.field, a.dim),), name=a.name
                )
            lpull = (self.base, self.embed) if left == "B" else None
            rpull = (self.base, self.embed) if right == "B" else None
            self._mods[key] = restrict(reg, left=lpull, right=rpull, name=a.name)
        return self._mods[key]

    def base_module(self) -> Bimodule:
        return self.base.regular()

    def image(self, b) -> list:
        return self.embed.apply(b)


def check_extension(ext: RingExtension) -> list[Check]:
    """Unit, multiplicativity, injectivity, and the expectation laws when present."""
    a, b = ext.total, ext.base
    out = []
    if ext.embed.apply(b.unit) != a.unit:
        out.append(Check("embedding unital", FAIL))
    else:
        out.append(Check("embedding unital"))
    bad = None
    for i in range(b.dim):
        for j in range(b.dim):
            lhs = ext.embed.apply(b.products[i][j])
            rhs = a.mul(ext.embed.column(i), ext.embed.column(j))
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    out.append(Check("embedding multiplicative", FAIL, {"pair": bad}) if bad else Check("embedding multiplicative"))
    inj = ext.embed.rank() == b.dim
    out.append(Check("embedding injective", "pass" if inj else FAIL))
    e = ext.expectation
    if e is not None:
        ok = is_module_map(e, ext.module("B", "B"), b.regular(), "two-sided")
        out.append(Check("expectation bilinear", "pass" if ok else FAIL))
        out.append(Check("expectation unital", "pass" if e.apply(a.unit) == b.unit else FAIL))
        out.append(Check("expectation retracts", "pass" if e @ ext.embed == Mat.identity(a.field, b.dim) else FAIL))
    return out
