"""Corings, comodules, cointegrals, cosplitting and grouplike elements.

A coring over ``A`` is an (A, A)-bimodule ``C`` with a coproduct matrix
``C -> C ⊗_A C`` (quotient coordinates) and, optionally, a counit matrix
``C -> A``.  Every decision here is a linear feasibility problem solved
exactly; returned certificates are re-verified before being handed out.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checks import FAIL, INAPPLICABLE, INFEASIBLE, Check, compare
from .exact import AffineSolution, Mat, Subspace, random_element, solve_affine
from .findim import (
    Algebra,
    AlgebraMismatch,
    Bimodule,
    HomSpace,
    associator,
    associator_inv,
    centralizer,
    hom_space,
    is_module_map,
    left_unitor,
    right_unitor,
    tensor,
    tensor_map,
)


class Coring:
    def __init__(self, carrier: Bimodule, coproduct: Mat, counit: Mat | None = None, name: str = "C"):
        if carrier.left_alg is not carrier.right_alg:
            raise AlgebraMismatch("a coring needs an (A, A)-bimodule carrier")
        self.carrier = carrier
        self.name = name
        self.cc = tensor(carrier, carrier)
        if coproduct.shape != (self.cc.dim, carrier.dim):
            raise ValueError(f"coproduct of shape {coproduct.shape}, expected {(self.cc.dim, carrier.dim)}")
        if counit is not None and counit.shape != (carrier.left_alg.dim, carrier.dim):
            raise ValueError(f"counit of shape {counit.shape}, expected {(carrier.left_alg.dim, carrier.dim)}")
        self.coproduct = coproduct
        self.counit = counit
        self.cache: dict = {}

    @property
    def alg(self) -> Algebra:
        return self.carrier.left_alg

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def counital(self) -> bool:
        return self.counit is not None

    def __repr__(self):
        return f"Coring({self.name}, dim={self.dim} over {self.alg.name})"

    def label(self, i: int) -> str:
        return self.carrier.label(i)

    def identity(self) -> Mat:
        return self.carrier.identity()

    def delta_left(self) -> Mat:
        """``Δ ⊗ I : C⊗C -> (C⊗C)⊗C``."""
        if "dl" not in self.cache:
            c = self.carrier
            self.cache["dl"] = tensor_map(self.coproduct, c.identity(), self.cc, tensor(self.cc, c))
        return self.cache["dl"]

    def delta_right(self) -> Mat:
        """``I ⊗ Δ : C⊗C -> C⊗(C⊗C)``."""
        if "dr" not in self.cache:
            c = self.carrier
            self.cache["dr"] = tensor_map(c.identity(), self.coproduct, self.cc, tensor(c, self.cc))
        return self.cache["dr"]


def sweedler_coring(ext, name: str | None = None) -> Coring:
    """``A ⊗_B A`` with ``Δ(a⊗a') = a⊗1⊗a'`` and ``ε(a⊗a') = aa'``."""
    a = ext.total
    c = tensor(ext.module("A", "B"), ext.module("B", "A"))
    c.name = name or f"{a.name}⊗{ext.base.name}{a.name}"
    cc = tensor(c, c)
    one = a.unit
    dcols, ecols = [], []
    for q in range(c.dim):
        i, j = c.split_index(q)
        ei, ej = a.basis_vector(i), a.basis_vector(j)
        dcols.append(cc.simple(c.simple(ei, one), c.simple(one, ej)))
        ecols.append(a.mul(ei, ej))
    f = a.field
    return Coring(c, Mat.from_columns(f, cc.dim, dcols), Mat.from_columns(f, a.dim, ecols), name=c.name)


def trivial_coring(a: Algebra, name: str = "C") -> Coring:
    """``C = A`` with ``Δ`` the inverse of ``A ⊗_A A -> A`` and ``ε = id``."""
    reg = a.regular()
    cc = tensor(reg, reg)
    cols = [cc.simple(a.basis_vector(i), a.unit) for i in range(a.dim)]
    return Coring(reg, Mat.from_columns(a.field, cc.dim, cols), Mat.identity(a.field, a.dim), name=name)


def direct_sum_coring(parts: list[Coring], name: str = "C") -> Coring:
    """Coproduct and counit act componentwise on ``C_1 ⊕ ... ⊕ C_n``."""
    from .findim import direct_sum

    carrier = direct_sum([p.carrier for p in parts], name=name)
    f = carrier.field
    cc = tensor(carrier, carrier)
    offs = []
    o = 0
    for p in parts:
        offs.append(o)
        o += p.dim
    dcols, ecols = [], []
    for k, p in enumerate(parts):
        for i in range(p.dim):
            img = p.coproduct.column(i)
            # lift Δ_k(c_i) to simple tensors of C_k, then embed into C⊗C
            vec = [f.zero] * cc.dim
            for q, x in enumerate(img):
                if x:
                    s, t = p.cc.split_index(q)
                    u = [f.zero] * carrier.dim
                    v = [f.zero] * carrier.dim
                    u[offs[k] + s] = f.one
                    v[offs[k] + t] = f.one
                    w = cc.simple(u, v)
                    vec = [f.norm(a + x * b) for a, b in zip(vec, w)]
            dcols.append(vec)
            ecols.append(p.counit.column(i) if p.counit is not None else None)
    counit = None
    if all(e is not None for e in ecols):
        counit = Mat.from_columns(f, carrier.left_alg.dim, ecols)
    return Coring(carrier, Mat.from_columns(f, cc.dim, dcols), counit, name=name)


# ---------------------------------------------------------------------------
# axioms


def check_coring(c: Coring) -> list[Check]:
    """Bilinearity of Δ and ε, coassociativity, and counit laws when counital."""
    car = c.carrier
    out = []
    out.append(Check("coproduct bilinear", "pass" if is_module_map(c.coproduct, car, c.cc) else FAIL))
    lhs = associator(car, car, car) @ (c.delta_left() @ c.coproduct)
    rhs = c.delta_right() @ c.coproduct
    out.append(compare("coassociativity", lhs, rhs, c.label, tensor(car, c.cc).label))
    if c.counit is None:
        out.append(Check("counit", INAPPLICABLE, {"reason": "non-counital coring"}))
        return out
    reg = c.alg.regular()
    out.append(Check("counit bilinear", "pass" if is_module_map(c.counit, car, reg) else FAIL))
    left = left_unitor(car) @ (tensor_map(c.counit, car.identity(), c.cc, tensor(reg, car)) @ c.coproduct)
    out.append(compare("left counit law", left, car.identity(), c.label, c.label))
    right = right_unitor(car) @ (tensor_map(car.identity(), c.counit, c.cc, tensor(car, reg)) @ c.coproduct)
    out.append(compare("right counit law", right, car.identity(), c.label, c.label))
    return out


def is_grouplike(c: Coring, g) -> Check:
    """``Δ(g) = g⊗g`` and ``ε(g) = 1``."""
    if c.counit is None:
        return Check("grouplike", INAPPLICABLE, {"reason": "non-counital coring"})
    f = c.field
    g = [f(x) for x in g]
    dg = c.coproduct.apply(g)
    gg = c.cc.simple(g, g)
    if dg != gg:
        bad = min(i for i in range(len(dg)) if dg[i] != gg[i])
        return Check("grouplike", FAIL, {"law": "coproduct", "at": c.cc.label(bad)})
    eg = c.counit.apply(g)
    if eg != c.alg.unit:
        from .checks import format_vector

        return Check("grouplike", FAIL, {"law": "counit", "counit": format_vector(f, eg, c.alg.label)})
    return Check("grouplike")


verify_grouplike = is_grouplike


# ---------------------------------------------------------------------------
# comodules


class Comodule:
    """Right C-comodule: carrier with right A-action and coaction ``M -> M ⊗_A C``."""

    def __init__(self, carrier: Bimodule, coring: Coring, coaction: Mat, name: str = "M"):
        if carrier.right_alg is not coring.alg:
            raise AlgebraMismatch("comodule carrier is not a module over the coring base")
        self.carrier = carrier
        self.coring = coring
        self.target = tensor(carrier, coring.carrier)
        if coaction.shape != (self.target.dim, carrier.dim):
            raise ValueError(f"coaction of shape {coaction.shape}, expected {(self.target.dim, carrier.dim)}")
        self.coaction = coaction
        self.name = name

    @property
    def dim(self):
        return self.carrier.dim


def regular_comodule(c: Coring) -> Comodule:
    return Comodule(c.carrier, c, c.coproduct, name=c.name)


def grouplike_comodule(c: Coring, g) -> Comodule:
    """``A`` with ``ρ(a) = 1 ⊗ g a``."""
    a = c.alg
    m = a.right_regular()
    t = tensor(m, c.carrier)
    f = a.field
    g = [f(x) for x in g]
    cols = [t.simple(a.unit, c.carrier.right[i].apply(g)) for i in range(a.dim)]
    return Comodule(m, c, Mat.from_columns(f, t.dim, cols), name=a.name)


def induced_comodule(m: Bimodule, c: Coring) -> Comodule:
    """``M ⊗_A C`` with coaction ``I ⊗ Δ``."""
    mc = tensor(m, c.carrier)
    mcc = tensor(mc, c.carrier)
    rho = associator_inv(m, c.carrier, c.carrier) @ tensor_map(m.identity(), c.coproduct, mc, tensor(m, c.cc))
    assert rho.shape == (mcc.dim, mc.dim)
    return Comodule(mc, c, rho, name=mc.name)


def check_comodule(m: Comodule) -> list[Check]:
    c = m.coring
    car = m.carrier
    out = []
    ok = is_module_map(m.coaction, car, m.target, "right")
    out.append(Check("coaction right-linear", "pass" if ok else FAIL))
    mcc = tensor(m.target, c.carrier)
    lhs = tensor_map(m.coaction, c.carrier.identity(), m.target, mcc) @ m.coaction
    rhs = associator_inv(car, c.carrier, c.carrier) @ (
        tensor_map(car.identity(), c.coproduct, m.target, tensor(car, c.cc)) @ m.coaction
    )
    out.append(compare("coaction coassociativity", lhs, rhs, car.label, mcc.label))
    if c.counit is None:
        out.append(Check("coaction counit", INAPPLICABLE, {"reason": "non-counital coring"}))
    else:
        reg = c.alg.regular()
        back = right_unitor(car) @ (tensor_map(car.identity(), c.counit, m.target, tensor(car, reg)) @ m.coaction)
        out.append(compare("coaction counit", back, car.identity(), car.label, car.label))
    return out


# ---------------------------------------------------------------------------
# cointegrals


def colinearity_sides(c: Coring, gamma: Mat) -> tuple[Mat, Mat]:
    """The two sides ``Σ γ(c⊗c'₁)c'₂`` and ``Σ c₁γ(c₂⊗c')`` as maps ``C⊗C -> C``."""
    car = c.carrier
    reg = c.alg.regular()
    ccc_l = tensor(c.cc, car)
    ccc_r = tensor(car, c.cc)
    lhs = left_unitor(car) @ (
        tensor_map(gamma, car.identity(), ccc_l, tensor(reg, car))
        @ (associator_inv(car, car, car) @ c.delta_right())
    )
    rhs = right_unitor(car) @ (
        tensor_map(car.identity(), gamma, ccc_r, tensor(car, reg)) @ (associator(car, car, car) @ c.delta_left())
    )
    return lhs, rhs


@dataclass
class Cointegral:
    coring: Coring
    gamma: Mat
    family_dim: int = 0
    checks: list = field(default_factory=list)


@dataclass
class CointegralFamily:
    """All cointegrals: ``Σ x_t h_t`` for ``x`` in an affine solution set."""

    coring: Coring
    hom: HomSpace
    solution: AffineSolution

    @property
    def feasible(self) -> bool:
        return self.solution.feasible

    def gamma(self, coeffs) -> Mat:
        return self.hom.combine(coeffs)

    def contains(self, gamma: Mat) -> bool:
        x = self.hom.coords(gamma)
        return x is not None and self.solution.contains(x)


def cointegral_family(c: Coring) -> CointegralFamily:
    if "cointegrals" in c.cache:
        return c.cache["cointegrals"]
    if c.counit is None:
        raise ValueError("cointegrals need a counit")
    f = c.field
    hom = hom_space(c.cc, c.alg.regular(), "two-sided")
    cols = []
    for h in hom.maps:
        lhs, rhs = colinearity_sides(c, h)
        norm = h @ c.coproduct
        cols.append((lhs - rhs).vec() + norm.vec())
    nrows = c.dim * c.cc.dim + c.alg.dim * c.dim
    rhs_vec = [f.zero] * (c.dim * c.cc.dim) + c.counit.vec()
    system = Mat.from_columns(f, nrows, cols) if cols else Mat.zeros(f, nrows, 0)
    fam = CointegralFamily(c, hom, solve_affine(system, rhs_vec))
    c.cache["cointegrals"] = fam
    return fam


def check_cointegral(c: Coring, gamma: Mat) -> list[Check]:
    out = [Check("cointegral bilinear", "pass" if is_module_map(gamma, c.cc, c.alg.regular()) else FAIL)]
    lhs, rhs = colinearity_sides(c, gamma)
    out.append(compare("cointegral colinearity", lhs, rhs, c.cc.label, c.label))
    out.append(compare("cointegral normalisation", gamma @ c.coproduct, c.counit, c.label, c.alg.label))
    return out


def solve_cointegral(c: Coring, seed: int | None = None) -> Cointegral | None:
    """A verified cointegral, or None when C is not coseparable.

    Without a seed the solver's particular solution is returned; with a seed
    a random member of the solution family.
    """
    fam = cointegral_family(c)
    if not fam.feasible:
        return None
    x = fam.solution.particular if seed is None else random_element(fam.solution, seed)
    gamma = fam.gamma(x)
    checks = check_cointegral(c, gamma)
    if not all(checks):
        raise ArithmeticError("solver returned an invalid cointegral")
    return Cointegral(c, gamma, fam.solution.kernel.dim, checks)


def cointegral_status(c: Coring) -> Check:
    if c.counit is None:
        return Check("coseparable", INAPPLICABLE, {"reason": "non-counital coring"})
    fam = cointegral_family(c)
    if not fam.feasible:
        return Check("coseparable", INFEASIBLE, {"hom_dim": fam.hom.dim})
    return Check("coseparable", detail={"family_dim": fam.solution.kernel.dim})


def gamma_to_pi(c: Coring, gamma: Mat) -> Mat:
    """``π(c⊗c') = Σ c₁γ(c₂⊗c')``."""
    return colinearity_sides(c, gamma)[1]


def pi_to_gamma(c: Coring, pi: Mat) -> Mat:
    return c.counit @ pi


def check_retraction(c: Coring, pi: Mat) -> list[Check]:
    """``π`` splits Δ and is a (C, C)-bicomodule map."""
    car = c.carrier
    out = [compare("retraction of coproduct", pi @ c.coproduct, car.identity(), c.label, c.label)]
    ccc_l, ccc_r = tensor(c.cc, car), tensor(car, c.cc)
    right = tensor_map(pi, car.identity(), ccc_l, c.cc) @ (associator_inv(car, car, car) @ c.delta_right())
    out.append(compare("right colinearity", c.coproduct @ pi, right, c.cc.label, c.cc.label))
    left = tensor_map(car.identity(), pi, ccc_r, c.cc) @ (associator(car, car, car) @ c.delta_left())
    out.append(compare("left colinearity", c.coproduct @ pi, left, c.cc.label, c.cc.label))
    return out


def expectation_cointegral(c: Coring, ext) -> Mat:
    """``γ_E(a⊗a'⊗a''⊗a''') = aE(a'a'')a'''`` on the Sweedler coring of ``ext``."""
    a = ext.total
    e = ext.expectation
    if e is None:
        raise ValueError("extension carries no conditional expectation")
    car = c.carrier
    cols = []
    for q in range(c.cc.dim):
        s, t = c.cc.split_index(q)
        i, j = car.split_index(s)
        k, l = car.split_index(t)
        mid = ext.embed.apply(e.apply(a.mul(a.basis_vector(j), a.basis_vector(k))))
        cols.append(a.mul(a.mul(a.basis_vector(i), mid), a.basis_vector(l)))
    return Mat.from_columns(a.field, a.dim, cols)


# ---------------------------------------------------------------------------
# cosplitting


@dataclass
class CosplitWitness:
    element: list
    checks: list


def is_cosplit(c: Coring) -> CosplitWitness | None:
    """Some ``e`` in the centraliser ``C^A`` with ``ε(e) = 1``."""
    if c.counit is None:
        raise ValueError("cosplitting needs a counit")
    f = c.field
    cent: Subspace = centralizer(c.carrier)
    basis = cent.basis
    if not basis:
        return None
    system = Mat.from_columns(f, c.alg.dim, [c.counit.apply(v) for v in basis])
    sol = solve_affine(system, c.alg.unit)
    if not sol.feasible:
        return None
    e = cent.vector(sol.particular)
    checks = check_cosplit_element(c, e)
    if not all(checks):
        raise ArithmeticError("solver returned an invalid cosplitting element")
    return CosplitWitness(e, checks)


def check_cosplit_element(c: Coring, e) -> list[Check]:
    car = c.carrier
    central = all(l.apply(e) == r.apply(e) for l, r in zip(car.left, car.right))
    return [
        Check("e central", "pass" if central else FAIL),
        Check("counit of e is one", "pass" if c.counit.apply(e) == c.alg.unit else FAIL),
    ]
