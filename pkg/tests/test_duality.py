import random

import pytest
from gmpy2 import mpq

from coringlab.corings import regular_comodule, trivial_coring
from coringlab.duality import (
    check_dual_ring,
    dual_ring,
    find_invertible,
    is_biseparable_coring,
    is_centrally_projective,
    is_coring_frobenius,
    is_frobenius_ext,
    is_separable_ext,
    is_split_ext,
    sweedler_dual_to_end,
    transfer_checks,
)
from coringlab.exact import QQ, Field, Mat, inverse
from coringlab.extension import RingExtension, check_extension
from coringlab.findim import tensor
from coringlab.zoo import fixture, zoo

from .conftest import self_extension


def test_trivial_duals(pool):
    a = pool["M2"]
    c = trivial_coring(a)
    for side in ("right", "left"):
        d = dual_ring(c, side)
        assert all(check_dual_ring(d))
        assert d.algebra.dim == a.dim
        assert inverse(d.iota) is not None


def test_diag2_dual_is_end(diag2):
    iso = sweedler_dual_to_end(diag2.coring, diag2.extension)
    assert iso.end_dim == iso.dual_dim == 8
    assert all(iso.checks)


@pytest.mark.parametrize("side", ["right", "left"])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_dual_associativity_random(diag2, side, seed):
    alg = dual_ring(diag2.coring, side).algebra
    rng = random.Random(seed)
    x, y, z = ([QQ.random(rng) for _ in range(alg.dim)] for _ in range(3))
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


def test_split(pool, diag2):
    a = pool["G"]
    assert is_split_ext(self_extension(a)) == Mat.identity(QQ, a.dim)
    e = is_split_ext(diag2.extension)
    ext = diag2.extension
    assert all(check_extension(RingExtension(ext.base, ext.total, ext.embed, e)))
    assert is_split_ext(fixture("NONSPLIT").extension) is None


def test_gauss_separability_element(gauss):
    ext = gauss.extension
    s = is_separable_ext(ext)
    assert s is not None and all(s.checks)
    t = tensor(ext.module("A", "B"), ext.module("B", "A"))
    g = ext.total
    one, i = g.unit, g.basis_vector(1)
    expect = [mpq(1, 2) * (u - v) for u, v in zip(t.simple(one, one), t.simple(i, i))]
    assert s.element == expect


def test_separable_self_and_dual_numbers(pool):
    a = pool["M2"]
    s = is_separable_ext(self_extension(a))
    t = tensor(self_extension(a).module("A", "B"), self_extension(a).module("B", "A"))
    assert s.element == t.simple(a.unit, a.unit)
    assert is_separable_ext(fixture("DUALNUM").extension) is None


def test_frobenius_extensions(pool, gauss, diag2):
    r = is_frobenius_ext(self_extension(pool["M2"]))
    assert r.frobenius and all(r.certificate.checks)
    r = is_frobenius_ext(gauss.extension)
    assert r.frobenius and all(r.certificate.checks)
    r = is_frobenius_ext(dual_ring(diag2.coring, "right").ext)
    assert r.frobenius


def test_upper_triangular_is_not_frobenius(pool):
    t2 = pool["T2"]
    k = pool["k"]
    ext = RingExtension(k, t2, Mat.from_columns(QQ, 3, [t2.unit]))
    r = is_frobenius_ext(ext)
    assert not r.frobenius


def test_find_invertible_stages():
    f = Field(101)
    e11 = Mat.from_dense(f, [[1, 0], [0, 0]])
    e22 = Mat.from_dense(f, [[0, 0], [0, 1]])
    x, how = find_invertible(f, [e11, e22], seed=3)
    assert how == "random" and (e11.scale(x[0]) + e22.scale(x[1])).rank() == 2
    nil = Mat.from_dense(f, [[0, 1], [0, 0]])
    assert find_invertible(f, [nil, e11]) == (None, "grid")
    x, how = find_invertible(QQ, [Mat.from_dense(QQ, [[1, 0], [0, 1]])], trials=0)
    assert how == "grid" and x == [1]


def test_symbolic_stage(monkeypatch):
    import coringlab.duality as du

    monkeypatch.setattr(du, "GRID_CAP", 0)
    e11 = Mat.from_dense(QQ, [[1, 0], [0, 0]])
    e22 = Mat.from_dense(QQ, [[0, 0], [0, 1]])
    x, how = find_invertible(QQ, [e11, e22], trials=0)
    assert how == "symbolic" and (e11.scale(x[0]) + e22.scale(x[1])).rank() == 2
    nil = Mat.from_dense(QQ, [[0, 1], [0, 0]])
    assert find_invertible(QQ, [nil, e11], trials=0) == (None, "symbolic")


def test_coring_frobenius(pool, diag2):
    assert is_coring_frobenius(trivial_coring(pool["M2"])).frobenius
    fr = is_coring_frobenius(diag2.coring)
    assert fr.frobenius and fr.agree
    ns = is_coring_frobenius(fixture("NONSPLIT").coring)
    assert ns.status == "inapplicable" and ns.result is None


def test_routes_agree_over_zoo():
    for name, fx in zoo().items():
        fr = is_coring_frobenius(fx.coring)
        assert fr.agree in (True, None), name


def test_biseparable(pool, diag2):
    assert is_biseparable_coring(diag2.coring).biseparable
    assert is_biseparable_coring(trivial_coring(pool["G"])).biseparable
    ns = is_biseparable_coring(fixture("NONSPLIT").coring)
    assert not ns.biseparable and ns.cointegral is None


def test_transfer_diag2(diag2):
    checks = transfer_checks(diag2.coring, [regular_comodule(diag2.coring)])
    names = {c.name: c for c in checks}
    assert names["coseparable iff iota* separable"].detail == {"coseparable": True, "separable": True}
    assert names["coseparable iff *iota separable"].detail == {"coseparable": True, "separable": True}
    assert names["comodule round trip C"]
    assert all(checks)


def test_centrally_projective(pool, diag2):
    assert is_centrally_projective(trivial_coring(pool["M2"])).n == 1
    assert is_centrally_projective(fixture("DIRSUM").coring).n == 2
    cp = is_centrally_projective(diag2.coring)
    if cp is not None:
        assert is_coring_frobenius(diag2.coring).frobenius
