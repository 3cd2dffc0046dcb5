import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coringlab.arings import (
    ARing,
    check_aring,
    check_module,
    coring_from_separable_aring,
    e_multiplication,
    find_unit,
    firm_tensor,
    induce_firm_module,
    is_separable_aring,
    product_from_cointegral,
    section_family,
    zero_module,
)
from coringlab.corings import (
    check_coring,
    expectation_cointegral,
    grouplike_comodule,
    regular_comodule,
    solve_cointegral,
    trivial_coring,
)
from coringlab.exact import QQ, Mat
from coringlab.findim import Bimodule, tensor
from coringlab.zoo import fixture

from .conftest import self_extension


def multiplication_ring(ext, name="R"):
    """The total algebra of ``ext`` as a ring over its base."""
    car = ext.module("B", "B")
    bb = tensor(car, car)
    a = ext.total
    cols = []
    for q in range(bb.dim):
        i, j = bb.split_index(q)
        cols.append(a.mul(a.basis_vector(i), a.basis_vector(j)))
    return ARing(car, Mat.from_columns(a.field, car.dim, cols), name=name)


def induced(fx, seed=None):
    c = fx.coring
    gi = solve_cointegral(c, seed=seed)
    return c, gi, product_from_cointegral(c, gi.gamma)


def test_unital_aring(pool):
    r = multiplication_ring(self_extension(pool["M2"]))
    assert all(check_aring(r))
    assert find_unit(r) == pool["M2"].unit


def test_induced_ring_certificate(diag2):
    _, _, ir = induced(diag2)
    assert all(ir.checks)


def test_swapped_columns_break_the_product(diag2):
    _, _, ir = induced(diag2)
    r = ir.ring
    cols = r.product.columns()
    cols[0], cols[1] = cols[1], cols[0]
    bad = ARing(r.carrier, Mat.from_columns(QQ, r.dim, cols))
    failed = [x for x in check_aring(bad) if not x]
    assert failed
    assoc = [x for x in failed if x.name == "associativity"]
    assert assoc and "at" in assoc[0].detail


def test_trivial_product_is_multiplication(pool):
    a = pool["G"]
    c = trivial_coring(a)
    ir = product_from_cointegral(c, solve_cointegral(c).gamma)
    for i in range(a.dim):
        for j in range(a.dim):
            assert ir.ring.mul(a.basis_vector(i), a.basis_vector(j)) == a.mul(a.basis_vector(i), a.basis_vector(j))


def test_diag2_product_is_e_multiplication(diag2):
    c = diag2.coring
    ir = product_from_cointegral(c, expectation_cointegral(c, diag2.extension))
    assert ir.ring.product == e_multiplication(diag2.extension).product


def test_e_multiplication_hand_value(diag2):
    r = e_multiplication(diag2.extension)
    a = diag2.extension.total
    e11, e12, e21 = (a.basis_vector(a.labels.index(n)) for n in ("e11", "e12", "e21"))
    car = r.carrier
    assert r.mul(car.simple(e11, e12), car.simple(e21, e11)) == car.simple(e11, e11)


def test_e_multiplication_identity_expectation(pool):
    a = pool["M2"]
    r = e_multiplication(self_extension(a))
    for i in range(a.dim):
        for j in range(a.dim):
            x, y = a.basis_vector(i), a.basis_vector(j)
            assert r.mul(r.carrier.simple(x, a.unit), r.carrier.simple(y, a.unit)) == r.carrier.simple(a.mul(x, y), a.unit)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_induced_associativity_on_random_elements(diag2, seed):
    _, _, ir = induced(diag2, seed)
    r = ir.ring
    rng = random.Random(seed)
    x, y, z = ([QQ.random(rng) for _ in range(r.dim)] for _ in range(3))
    assert r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))


def test_separability_of_induced_ring(diag2):
    c, _, ir = induced(diag2)
    assert is_separable_aring(ir.ring) is not None
    assert section_family(ir.ring).contains(c.coproduct)


def test_separable_unital(pool):
    r = multiplication_ring(self_extension(pool["M2"]))
    sec = is_separable_aring(r)
    assert sec is not None and all(sec.checks)


def test_dual_numbers_not_separable():
    assert is_separable_aring(multiplication_ring(fixture("DUALNUM").extension)) is None


def test_induced_modules_are_firm(diag2):
    for fx in (fixture("TRIV"), diag2):
        c = fx.coring
        gi = solve_cointegral(c)
        for m in (regular_comodule(c), grouplike_comodule(c, fx.grouplike)):
            mod = induce_firm_module(c, gi.gamma, m)
            assert all(check_module(mod))
            ft = firm_tensor(mod)
            assert ft.kernel_action == ft.image_lam
            assert ft.bijective


def test_zero_modules(diag2):
    _, _, ir = induced(diag2)
    a = diag2.coring.alg
    k = a.right_regular().left_alg
    nothing = Mat.zeros(QQ, 0, 0)
    zero = Bimodule(k, a, 0, [nothing] * k.dim, [nothing] * a.dim)
    assert firm_tensor(zero_module(zero, ir.ring)).bijective
    nonfirm = firm_tensor(zero_module(a.right_regular(), ir.ring))
    assert not nonfirm.bijective
    assert nonfirm.comparison.is_zero()
    assert nonfirm.comparison_cokernel_dim == a.dim


def test_round_trip_recovers_coproduct(diag2):
    c, _, ir = induced(diag2)
    back, checks = coring_from_separable_aring(ir.ring, c.coproduct)
    assert back.coproduct == c.coproduct
    assert all(x for x in checks if x.status != "inapplicable")


def test_unital_section_gives_trivial_noncounital(pool):
    a = pool["M2"]
    r = multiplication_ring(self_extension(a))
    t = trivial_coring(a)
    assert r.bb.dim == t.cc.dim
    back, checks = coring_from_separable_aring(r, t.coproduct)
    assert back.counit is None
    assert all(x for x in checks if x.status != "inapplicable")


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_random_sections_are_coassociative(seed):
    _, _, ir = induced(fixture("GAUSS"))
    sec = is_separable_aring(ir.ring, seed=seed)
    back, _ = coring_from_separable_aring(ir.ring, sec.delta)
    assert next(x for x in check_coring(back) if x.name == "coassociativity")
