from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from coringlab.exact import (
    QQ,
    Field,
    Mat,
    Subspace,
    image,
    inverse,
    kernel,
    quotient,
    random_element,
    rational_reconstruction,
    rref,
    solve_affine,
)
from coringlab.findim import tensor
from coringlab.zoo import fixture

F7 = Field(7)

small = st.integers(min_value=-4, max_value=4)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def test_field_normalises():
    assert QQ(mpq(4, -6)) == mpq(-2, 3)
    assert F7(-1) == 6
    assert F7(mpq(1, 2)) == 4
    assert F7.inv(3) * 3 % 7 == 1


def test_rref_hand_example():
    r, piv = rref(Mat.from_dense(QQ, [[2, 4], [1, 2]]))
    assert r.to_dense() == [[1, 2], [0, 0]]
    assert piv == [0]


def test_rref_trivial_cases():
    ident = Mat.identity(QQ, 3)
    r, piv = rref(ident)
    assert r == ident and piv == [0, 1, 2]
    r, piv = rref(Mat.zeros(QQ, 2, 3))
    assert r.is_zero() and piv == []


def test_solve_hand_example():
    sol = solve_affine(Mat.from_dense(QQ, [[1, 1]]), [2])
    assert sol.particular == [2, 0]
    assert sol.kernel == Subspace.from_vectors(QQ, 2, [[1, -1]])


def test_solve_identity_and_zero():
    sol = solve_affine(Mat.identity(QQ, 3), [1, mpq(1, 2), -3])
    assert sol.particular == [1, mpq(1, 2), -3] and sol.kernel.dim == 0
    sol = solve_affine(Mat.zeros(QQ, 2, 2), [0, 0])
    assert sol.particular == [0, 0] and sol.kernel.dim == 2


def test_infeasible_is_a_value():
    sol = solve_affine(Mat.from_dense(QQ, [[1, 1], [1, 1]]), [0, 1])
    assert not sol and sol.particular is None


def test_random_element_seeding():
    sol = solve_affine(Mat.from_dense(QQ, [[1, 1]]), [2])
    assert random_element(sol, 3) == random_element(sol, 3)
    x, y = random_element(sol, 1), random_element(sol, 2)
    assert sol.contains(x) and sol.contains(y)
    d = [a - b for a, b in zip(x, y)]
    assert sol.kernel.contains(d)
    pinned = solve_affine(Mat.identity(QQ, 2), [1, 1])
    assert random_element(pinned, 5) == [1, 1]


def test_quotient_extremes():
    q = quotient(3, Subspace.zero(QQ, 3))
    assert q.dim == 3 and q.projection == Mat.identity(QQ, 3)
    assert quotient(3, Subspace.full(QQ, 3)).dim == 0


def test_diag2_balancing_quotient():
    a = fixture("DIAG2").extension.module("A", "B")
    t = tensor(a, fixture("DIAG2").extension.module("B", "A"))
    assert t.quot.ambient == 16
    assert t.quot.relations.dim == 8
    assert t.dim == 8


def test_rational_reconstruction():
    p = 10007
    x = mpq(-3, 7)
    a = x.numerator * pow(x.denominator, -1, p) % p
    assert rational_reconstruction(a, p) == x


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rref_kernel_invariants(rows):
    m = Mat.from_dense(QQ, rows)
    r, piv = rref(m)
    assert len(piv) == m.rank()
    for i, c in enumerate(piv):
        assert r[i, c] == 1
        assert all(r[k, c] == 0 for k in range(r.nrows) if k != i)
    ker = kernel(m)
    assert ker.dim + m.rank() == m.ncols
    for v in ker.basis:
        assert all(x == 0 for x in m.apply(v))
    assert image(m).dim == m.rank()


@settings(max_examples=40, deadline=None)
@given(matrices(), st.integers(0, 1))
def test_solve_substitution(rows, fp):
    f = F7 if fp else QQ
    m = Mat.from_dense(f, rows)
    x = [f(i - 1) for i in range(m.ncols)]
    sol = solve_affine(m, m.apply(x))
    assert sol.feasible and sol.contains(x)
    assert m.apply(sol.particular) == m.apply(x)


@settings(max_examples=40, deadline=None)
@given(matrices(st.just(3), st.just(3)))
def test_inverse_roundtrip(rows):
    m = Mat.from_dense(QQ, rows)
    inv = inverse(m)
    if m.rank() < 3:
        assert inv is None
    else:
        assert m @ inv == Mat.identity(QQ, 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=0, max_size=4))
def test_quotient_invariants(vecs):
    rel = Subspace.from_vectors(QQ, 4, vecs)
    q = quotient(4, rel)
    assert q.dim == 4 - rel.dim
    assert q.projection @ q.section == Mat.identity(QQ, q.dim)
    assert kernel(q.projection) == rel
