"""A-rings (possibly non-unital), their modules, firmness, and the bridges to corings."""

from __future__ import annotations

from dataclasses import dataclass, field

from .checks import FAIL, INAPPLICABLE, Check, compare
from .corings import Comodule, Coring, check_retraction, colinearity_sides, gamma_to_pi
from .exact import AffineSolution, Mat, Subspace, image, kernel, quotient, random_element, solve_affine
from .findim import (
    Algebra,
    Bimodule,
    HomSpace,
    associator,
    associator_inv,
    centralizer,
    hom_space,
    is_module_map,
    right_unitor,
    tensor,
    tensor_map,
)


class ARing:
    """Bimodule ``B`` over ``A`` with product ``μ : B ⊗_A B -> B``."""

    def __init__(self, carrier: Bimodule, product: Mat, name: str = "R"):
        self.carrier = carrier
        self.bb = tensor(carrier, carrier)
        if product.shape != (carrier.dim, self.bb.dim):
            raise ValueError(f"product of shape {product.shape}, expected {(carrier.dim, self.bb.dim)}")
        self.product = product
        self.name = name
        self.cache: dict = {}

    @property
    def alg(self) -> Algebra:
        return self.carrier.left_alg

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def mul(self, x, y) -> list:
        return self.product.apply(self.bb.simple(x, y))

    def __repr__(self):
        return f"ARing({self.name}, dim={self.dim} over {self.alg.name})"


def check_aring(r: ARing) -> list[Check]:
    b = r.carrier
    out = [Check("product bilinear", "pass" if is_module_map(r.product, r.bb, b) else FAIL)]
    left_src = tensor(r.bb, b)
    lhs = r.product @ tensor_map(r.product, b.identity(), left_src, r.bb)
    rhs = r.product @ (tensor_map(b.identity(), r.product, tensor(b, r.bb), r.bb) @ associator(b, b, b))
    out.append(compare("associativity", lhs, rhs, left_src.label, b.label))
    return out


# ---------------------------------------------------------------------------
# Coseparable coring -> separable A-ring


@dataclass
class InducedRing:
    ring: ARing
    checks: list


def product_from_cointegral(c: Coring, gamma: Mat) -> InducedRing:
    """C with product ``cc' = Σ γ(c⊗c'₁)c'₂ = Σ c₁γ(c₂⊗c')``."""
    first, second = colinearity_sides(c, gamma)
    checks = [compare("alternative products agree", first, second, c.cc.label, c.label)]
    ring = ARing(c.carrier, second, name=c.name)
    checks += check_aring(ring)
    checks += [
        Check(x.name.replace("colinearity", "C-linearity of coproduct"), x.status, x.detail)
        for x in check_retraction(c, second)
    ]
    return InducedRing(ring, checks)


# ---------------------------------------------------------------------------
# separability


def _left_b_linear(r: ARing, delta: Mat) -> Mat:
    """``(μ ⊗ I) ∘ assoc⁻¹ ∘ (I ⊗ δ)`` on ``B ⊗ B``."""
    b = r.carrier
    return tensor_map(r.product, b.identity(), tensor(r.bb, b), r.bb) @ (
        associator_inv(b, b, b) @ tensor_map(b.identity(), delta, r.bb, tensor(b, r.bb))
    )


def _right_b_linear(r: ARing, delta: Mat) -> Mat:
    """``(I ⊗ μ) ∘ assoc ∘ (δ ⊗ I)`` on ``B ⊗ B``."""
    b = r.carrier
    return tensor_map(b.identity(), r.product, tensor(b, r.bb), r.bb) @ (
        associator(b, b, b) @ tensor_map(delta, b.identity(), r.bb, tensor(r.bb, b))
    )


def check_section(r: ARing, delta: Mat) -> list[Check]:
    b = r.carrier
    dm = delta @ r.product
    return [
        Check("section bilinear over A", "pass" if is_module_map(delta, b, r.bb) else FAIL),
        compare("section splits product", r.product @ delta, b.identity(), b.label, b.label),
        compare("section left B-linear", dm, _left_b_linear(r, delta), r.bb.label, r.bb.label),
        compare("section right B-linear", dm, _right_b_linear(r, delta), r.bb.label, r.bb.label),
    ]


@dataclass
class SectionFamily:
    ring: ARing
    hom: HomSpace
    solution: AffineSolution

    @property
    def feasible(self):
        return self.solution.feasible

    def delta(self, coeffs) -> Mat:
        return self.hom.combine(coeffs)

    def contains(self, delta: Mat) -> bool:
        x = self.hom.coords(delta)
        return x is not None and self.solution.contains(x)


@dataclass
class SeparabilitySection:
    ring: ARing
    delta: Mat
    family_dim: int = 0
    checks: list = field(default_factory=list)


def section_family(r: ARing) -> SectionFamily:
    """All (B, B)-bilinear sections of μ, searched among (A, A)-bilinear maps."""
    if "sections" in r.cache:
        return r.cache["sections"]
    f = r.field
    b = r.carrier
    hom = hom_space(b, r.bb, "two-sided")
    cols = []
    for h in hom.maps:
        dm = h @ r.product
        cols.append((r.product @ h).vec() + (dm - _left_b_linear(r, h)).vec() + (dm - _right_b_linear(r, h)).vec())
    n_id = b.dim * b.dim
    n_lin = r.bb.dim * r.bb.dim
    rhs = b.identity().vec() + [f.zero] * (2 * n_lin)
    system = Mat.from_columns(f, n_id + 2 * n_lin, cols) if cols else Mat.zeros(f, n_id + 2 * n_lin, 0)
    fam = SectionFamily(r, hom, solve_affine(system, rhs))
    r.cache["sections"] = fam
    return fam


def is_separable_aring(r: ARing, seed: int | None = None) -> SeparabilitySection | None:
    fam = section_family(r)
    if not fam.feasible:
        return None
    x = fam.solution.particular if seed is None else random_element(fam.solution, seed)
    delta = fam.delta(x)
    checks = check_section(r, delta)
    if not all(checks):
        raise ArithmeticError("solver returned an invalid section")
    return SeparabilitySection(r, delta, fam.solution.kernel.dim, checks)


def coring_from_separable_aring(r: ARing, delta: Mat, name: str | None = None) -> tuple[Coring, list[Check]]:
    """Non-counital coring with coproduct δ; μ is checked to be a bicolinear retraction."""
    from .corings import check_coring

    c = Coring(r.carrier, delta, None, name=name or r.name)
    checks = check_coring(c)
    checks += check_retraction(c, r.product)
    return c, checks


# ---------------------------------------------------------------------------
# units


def find_unit(r: ARing) -> list | None:
    """``u`` in ``B^A`` with ``ub = b = bu`` for all b, if one exists."""
    f = r.field
    b = r.carrier
    cent = centralizer(b)
    if cent.dim == 0:
        return None
    cols = []
    for v in cent.basis:
        lu = Mat.from_columns(f, b.dim, [r.mul(v, b.basis_vector(j)) for j in range(b.dim)])
        ru = Mat.from_columns(f, b.dim, [r.mul(b.basis_vector(j), v) for j in range(b.dim)])
        cols.append(lu.vec() + ru.vec())
    rhs = b.identity().vec() * 2
    sol = solve_affine(Mat.from_columns(f, 2 * b.dim * b.dim, cols), rhs)
    if not sol.feasible:
        return None
    return cent.vector(sol.particular)


def unital_extension(r: ARing, unit: list):
    """The ring extension ``A -> B``, ``a -> a·u``, of a unital A-ring."""
    from .extension import RingExtension

    f = r.field
    b = r.carrier
    prods = [[r.mul(b.basis_vector(i), b.basis_vector(j)) for j in range(b.dim)] for i in range(b.dim)]
    total = Algebra(f, b.dim, prods, unit, labels=[b.label(i) for i in range(b.dim)], name=r.name)
    a = r.alg
    embed = Mat.from_columns(f, b.dim, [b.left[i].apply(unit) for i in range(a.dim)])
    return RingExtension(a, total, embed, name=f"{a.name}->{r.name}")


# ---------------------------------------------------------------------------
# modules and firmness


class ARingModule:
    """Right (or left) module over an A-ring with action ``M ⊗_A B -> M`` (``B ⊗_A M -> M``)."""

    def __init__(self, carrier: Bimodule, ring: ARing, action: Mat, side: str = "right", name: str = "M"):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.carrier = carrier
        self.ring = ring
        self.side = side
        self.name = name
        self.src = tensor(carrier, ring.carrier) if side == "right" else tensor(ring.carrier, carrier)
        if action.shape != (carrier.dim, self.src.dim):
            raise ValueError(f"action of shape {action.shape}, expected {(carrier.dim, self.src.dim)}")
        self.action = action

    def act(self, x, y) -> list:
        return self.action.apply(self.src.simple(x, y))

    def lam(self) -> tuple[Mat, Bimodule]:
        """The map whose cokernel is ``M ⊗_B B`` (resp. ``B ⊗_B M``), with its source."""
        m, b, r = self.carrier, self.ring.carrier, self.ring
        if self.side == "right":
            src = tensor(self.src, b)  # (M⊗B)⊗B
            first = tensor_map(self.action, b.identity(), src, tensor(m, b))
            second = tensor_map(m.identity(), r.product, tensor(m, r.bb), tensor(m, b)) @ associator(m, b, b)
        else:
            src = tensor(r.bb, m)  # (B⊗B)⊗M
            first = tensor_map(b.identity(), self.action, tensor(b, self.src), tensor(b, m)) @ associator(b, b, m)
            second = tensor_map(r.product, m.identity(), src, tensor(b, m))
        return first - second, src


def check_module(m: ARingModule) -> list[Check]:
    lam, src = m.lam()
    side = "right" if m.side == "right" else "left"
    lin = is_module_map(m.action, m.src, m.carrier, "right" if side == "right" else "left")
    return [
        Check("action linear", "pass" if lin else FAIL),
        compare("action associativity", m.action @ lam, Mat.zeros(m.carrier.field, m.carrier.dim, src.dim), src.label, m.carrier.label),
    ]


@dataclass
class FirmTensor:
    """``M ⊗_B B`` as the cokernel of λ, with the comparison map to M."""

    lam: Mat
    kernel_action: Subspace
    image_lam: Subspace
    cokernel_dim: int
    comparison: Mat
    exact: bool
    bijective: bool

    @property
    def comparison_cokernel_dim(self) -> int:
        return self.comparison.nrows - self.comparison.rank()


def firm_tensor(m: ARingModule) -> FirmTensor:
    lam, _ = m.lam()
    ker = kernel(m.action)
    im = image(lam)
    q = quotient(lam.nrows, im)
    comp = m.action @ q.section
    exact = ker == im
    bijective = comp.nrows == comp.ncols and comp.rank() == comp.nrows
    return FirmTensor(lam, ker, im, q.dim, comp, exact, bijective)


def firmness_checks(m: ARingModule) -> list[Check]:
    ft = firm_tensor(m)
    return [
        Check("lambda sequence exact", "pass" if ft.exact else FAIL, {"ker": ft.kernel_action.dim, "im": ft.image_lam.dim}),
        Check("firm", "pass" if ft.bijective else FAIL, {"cokernel_dim": ft.cokernel_dim}),
    ]


def induce_firm_module(c: Coring, gamma: Mat, m: Comodule, ring: ARing | None = None) -> ARingModule:
    """Action ``m·c = Σ m₀γ(m₁⊗c)`` on a right C-comodule."""
    if ring is None:
        ring = ARing(c.carrier, gamma_to_pi(c, gamma), name=c.name)
    car, cc = m.carrier, c.carrier
    mc = m.target
    act = right_unitor(car) @ (
        tensor_map(car.identity(), gamma, tensor(car, c.cc), tensor(car, c.alg.regular()))
        @ (associator(car, cc, cc) @ tensor_map(m.coaction, cc.identity(), mc, tensor(mc, cc)))
    )
    return ARingModule(car, ring, act, "right", name=m.name)


def zero_module(m: Bimodule, ring: ARing) -> ARingModule:
    """``m`` with the zero action (a module, firm only when it vanishes)."""
    src = tensor(m, ring.carrier)
    return ARingModule(m, ring, Mat.zeros(m.field, m.dim, src.dim), "right", name=m.name)


# ---------------------------------------------------------------------------
# E-multiplication


def e_multiplication(ext) -> ARing:
    """``(a⊗a')(a''⊗a''') = aE(a'a'')⊗a'''`` on ``A ⊗_B A``."""
    from .corings import sweedler_coring
    from .extension import check_extension

    if ext.expectation is None:
        raise ValueError("extension carries no conditional expectation")
    checks = check_extension(ext)
    if not all(checks):
        bad = [c.name for c in checks if not c]
        raise ValueError(f"invalid conditional expectation: {', '.join(bad)}")
    c = sweedler_coring(ext)
    a = ext.total
    car = c.carrier
    cols = []
    for q in range(c.cc.dim):
        s, t = c.cc.split_index(q)
        i, j = car.split_index(s)
        k, l = car.split_index(t)
        mid = ext.embed.apply(ext.expectation.apply(a.mul(a.basis_vector(j), a.basis_vector(k))))
        cols.append(car.simple(a.mul(a.basis_vector(i), mid), a.basis_vector(l)))
    return ARing(car, Mat.from_columns(a.field, car.dim, cols), name=c.name)


def not_applicable(name: str, reason: str) -> Check:
    return Check(name, INAPPLICABLE, {"reason": reason})
