import pytest

from coringlab.exact import Subspace
from coringlab.corings import expectation_cointegral, solve_cointegral, trivial_coring
from coringlab.morita import (
    MoritaContext,
    adjunction_checks,
    dual_bases,
    end_c_of_a,
    is_strict,
    omega_theta,
)
from coringlab.zoo import fixture


def context(name, gamma=None):
    fx = fixture(name)
    c = fx.coring
    if gamma is None:
        gamma = solve_cointegral(c).gamma
    return MoritaContext(c, gamma, fx.grouplike)


@pytest.fixture(scope="module")
def diag2_ctx():
    fx = fixture("DIAG2")
    return MoritaContext(fx.coring, expectation_cointegral(fx.coring, fx.extension), fx.grouplike)


def test_trivial_context(pool):
    a = pool["M2"]
    c = trivial_coring(a)
    ctx = MoritaContext(c, solve_cointegral(c).gamma, a.unit)
    assert ctx.verified
    assert ctx.B.dim == a.dim and ctx.Q.dim == a.dim
    st = is_strict(ctx)
    assert st.strict and st.g_left_unit
    db = dual_bases(ctx)
    assert db.a_elems == [a.unit] and db.q_elems == [a.unit]


def test_diag2_example(diag2_ctx):
    ctx = diag2_ctx
    assert ctx.verified
    assert ctx.B.dim == 2 and ctx.Q.dim == 4
    assert ctx.tau_bijective and ctx.sigma_bijective
    assert is_strict(ctx).strict


def test_diag2_b_is_the_diagonal(diag2_ctx):
    ext = fixture("DIAG2").extension
    f = ext.field
    diag = Subspace.from_vectors(f, ext.total.dim, ext.embed.columns())
    assert Subspace.from_vectors(f, ext.total.dim, diag2_ctx.embed.columns()) == diag


def test_diag2_q_is_a_tensor_one(diag2_ctx):
    ctx = diag2_ctx
    c = ctx.coring
    a = c.alg
    for v in ctx.q_space.basis:
        assert ctx.q_space.contains(v)
    for i in range(a.dim):
        assert ctx.q_space.contains(c.carrier.simple(a.basis_vector(i), a.unit))


def test_diag2_tau_is_expectation(diag2_ctx):
    ctx = diag2_ctx
    ext = fixture("DIAG2").extension
    a = ext.total
    qs = ctx.q_space
    for i in range(a.dim):
        for j in range(a.dim):
            q = ctx.coring.carrier.simple(a.basis_vector(j), a.unit)
            tv = ctx.tau.apply(ctx.AQ.simple(a.basis_vector(i), qs.coords(q)))
            assert ctx.embed.apply(tv) == ext.embed.apply(ext.expectation.apply(a.mul(a.basis_vector(i), a.basis_vector(j))))


def test_q_contains_g_and_g_is_right_unit(diag2_ctx):
    ctx = diag2_ctx
    assert ctx.q_space.contains(ctx.g)
    for q in ctx.q_space.basis:
        assert ctx.ring.mul(q, ctx.g) == q


def test_gauss_b_is_scalars():
    ctx = context("GAUSS")
    assert ctx.B.dim == 1 and ctx.verified


def test_omega_theta_inverse(diag2_ctx):
    for which in ("A", "C"):
        ot = omega_theta(diag2_ctx, which)
        assert all(ot.checks), which


def test_omega_a_is_tau(diag2_ctx):
    ot = omega_theta(diag2_ctx, "A")
    assert ot.omega.shape == diag2_ctx.tau.shape
    assert ot.omega == diag2_ctx.tau


def test_dual_bases_and_adjunction(diag2_ctx):
    for solve in (False, True):
        db = dual_bases(diag2_ctx, solve=solve)
        assert db is not None and all(db.checks)
    assert all(adjunction_checks(diag2_ctx))


def test_end_c_of_a(diag2_ctx):
    end = end_c_of_a(diag2_ctx)
    assert end.isomorphic and end.b_dim == 2


@pytest.mark.parametrize("name", ["TRIV", "DIAG2", "GAUSS", "C2GROUP", "DIRSUM"])
def test_tau_bijective_everywhere(name):
    ctx = context(name)
    assert ctx.tau_bijective
