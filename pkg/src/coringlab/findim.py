"""Finite-dimensional algebras, bimodules and tensor products over an algebra.

Conventions: vectors are columns, a linear map ``V -> W`` is a ``W.dim x V.dim``
matrix, and the basis of ``V ⊗_k W`` is ordered ``i * W.dim + j``.  A
bimodule keeps one matrix per basis element of each acting algebra, so the
ground field acts through the one-dimensional algebra ``Algebra.ground``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .checks import FAIL, Check, compare
from .exact import Field, Mat, QuotientSpace, Subspace, quotient, solve_affine


class AlgebraMismatch(ValueError):
    pass


def lincomb(fld: Field, coeffs: Sequence, mats: Sequence[Mat], nrows: int, ncols: int) -> Mat:
    out = Mat.zeros(fld, nrows, ncols)
    for c, m in zip(coeffs, mats):
        if c:
            out = out + m.scale(c)
    return out


def block_diag(mats: Sequence[Mat]) -> Mat:
    fld = mats[0].field
    rows = []
    coff = 0
    ncols = sum(m.ncols for m in mats)
    for m in mats:
        for r in m.rows:
            rows.append({coff + j: x for j, x in r.items()})
        coff += m.ncols
    return Mat(fld, len(rows), ncols, rows)


class Algebra:
    """Unital associative algebra given by structure constants.

    ``products[i][j]`` is the coordinate vector of ``e_i e_j``.
    """

    _grounds: dict = {}

    def __init__(self, field: Field, dim: int, products, unit: Sequence, labels=None, name: str = "A"):
        self.field = field
        self.dim = dim
        self.name = name
        self.unit = [field(x) for x in unit]
        if len(self.unit) != dim:
            raise ValueError("unit vector has wrong length")
        self.products = [[[field(x) for x in products[i][j]] for j in range(dim)] for i in range(dim)]
        self.labels = tuple(labels) if labels else tuple(f"{name.lower()}{i}" for i in range(dim))
        lm = [[{} for _ in range(dim)] for _ in range(dim)]
        rm = [[{} for _ in range(dim)] for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                for k, x in enumerate(self.products[i][j]):
                    if x:
                        lm[i][k][j] = x
                        rm[j][k][i] = x
        self.lmul = tuple(Mat(field, dim, dim, r) for r in lm)
        self.rmul = tuple(Mat(field, dim, dim, r) for r in rm)
        self._regular = {}

    @classmethod
    def ground(cls, field: Field) -> "Algebra":
        if field not in cls._grounds:
            cls._grounds[field] = cls(field, 1, [[[1]]], [1], labels=["1"], name="k")
        return cls._grounds[field]

    @classmethod
    def from_basis_matrices(cls, field, mats: Sequence[Mat], unit_mat: Mat, labels=None, name="A"):
        """Algebra spanned by linearly independent square matrices closed under product."""
        space = Subspace.from_vectors(field, mats[0].nrows * mats[0].ncols, [m.vec() for m in mats])
        if space.dim != len(mats):
            raise ValueError("matrices are not linearly independent")
        # coordinates relative to the given spanning set, not the echelon basis
        basis = Mat.from_columns(field, space.ambient, [m.vec() for m in mats])

        def coords(m: Mat):
            sol = solve_affine(basis, m.vec())
            if not sol.feasible:
                raise ValueError("matrix span is not closed under product")
            return sol.particular

        products = [[coords(a @ b) for b in mats] for a in mats]
        return cls(field, len(mats), products, coords(unit_mat), labels=labels, name=name)

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, {self.field.name})"

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def lmul_of(self, x: Sequence) -> Mat:
        return lincomb(self.field, x, self.lmul, self.dim, self.dim)

    def rmul_of(self, x: Sequence) -> Mat:
        return lincomb(self.field, x, self.rmul, self.dim, self.dim)

    def mul(self, x: Sequence, y: Sequence) -> list:
        return self.lmul_of(x).apply(y)

    def label(self, i: int) -> str:
        return self.labels[i]

    def regular(self) -> "Bimodule":
        """A as an (A, A)-bimodule."""
        if "AA" not in self._regular:
            self._regular["AA"] = Bimodule(self, self, self.dim, self.lmul, self.rmul, name=self.name, labels=self.labels)
        return self._regular["AA"]

    def right_regular(self) -> "Bimodule":
        """A as a (k, A)-bimodule, i.e. the right module A_A."""
        if "kA" not in self._regular:
            k = Algebra.ground(self.field)
            self._regular["kA"] = Bimodule(
                k, self, self.dim, (Mat.identity(self.field, self.dim),), self.rmul, name=self.name, labels=self.labels
            )
        return self._regular["kA"]

    def left_regular(self) -> "Bimodule":
        """A as an (A, k)-bimodule, i.e. the left module _AA."""
        if "Ak" not in self._regular:
            k = Algebra.ground(self.field)
            self._regular["Ak"] = Bimodule(
                self, k, self.dim, self.lmul, (Mat.identity(self.field, self.dim),), name=self.name, labels=self.labels
            )
        return self._regular["Ak"]

    def to_field(self, field: Field) -> "Algebra":
        prods = [[[field(x) for x in v] for v in row] for row in self.products]
        return Algebra(field, self.dim, prods, [field(x) for x in self.unit], labels=self.labels, name=self.name)


def check_algebra(a: Algebra) -> Check:
    """Associativity on all basis triples, then the two unit laws."""
    f = a.field
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = a.lmul_of(a.products[i][j])
            rhs = a.lmul[i] @ a.lmul[j]
            if lhs != rhs:
                diff = lhs - rhs
                k = min(c for r in diff.rows for c in r)
                return Check("associativity", FAIL, {"triple": (i, j, k), "at": f"({a.label(i)}{a.label(j)}){a.label(k)}"})
    ident = Mat.identity(f, a.dim)
    for name, op in (("left unit", a.lmul_of(a.unit)), ("right unit", a.rmul_of(a.unit))):
        if op != ident:
            diff = op - ident
            k = min(c for r in diff.rows for c in r)
            return Check(name, FAIL, {"element": k, "at": a.label(k)})
    return Check("algebra")


class Bimodule:
    """Finite-dimensional (L, R)-bimodule with explicit action matrices."""

    def __init__(self, left_alg: Algebra, right_alg: Algebra, dim: int, left, right, name: str = "M", labels=None):
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        self.left = tuple(left)
        self.right = tuple(right)
        self.name = name
        self.labels = tuple(labels) if labels else None
        self.cache: dict = {}
        if len(self.left) != left_alg.dim or len(self.right) != right_alg.dim:
            raise ValueError("one action matrix per algebra basis element is required")
        for m in self.left + self.right:
            if m.shape != (dim, dim):
                raise ValueError(f"action matrix of shape {m.shape} on a {dim}-dimensional module")

    @property
    def field(self) -> Field:
        return self.left_alg.field

    def __repr__(self):
        return f"Bimodule({self.name}, dim={self.dim}, {self.left_alg.name}|{self.right_alg.name})"

    def label(self, i: int) -> str:
        if self.labels:
            return self.labels[i]
        return f"{self.name.lower()}{i}"

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def act_left(self, a: Sequence) -> Mat:
        return lincomb(self.field, a, self.left, self.dim, self.dim)

    def act_right(self, a: Sequence) -> Mat:
        return lincomb(self.field, a, self.right, self.dim, self.dim)

    def identity(self) -> Mat:
        return Mat.identity(self.field, self.dim)


def check_bimodule(m: Bimodule) -> Check:
    ident = m.identity()
    for side, alg, acts, order in (("left", m.left_alg, m.left, 1), ("right", m.right_alg, m.right, -1)):
        comb = m.act_left if side == "left" else m.act_right
        if comb(alg.unit) != ident:
            return Check(f"{side} unit", FAIL)
        for i in range(alg.dim):
            for j in range(alg.dim):
                prod = comb(alg.products[i][j])
                # left: x(y m) = (xy)m ; right: (m x) y = m (xy)
                comp = acts[i] @ acts[j] if order == 1 else acts[j] @ acts[i]
                if prod != comp:
                    return Check(f"{side} action", FAIL, {"pair": (i, j)})
    for i, l in enumerate(m.left):
        for j, r in enumerate(m.right):
            if l @ r != r @ l:
                return Check("actions commute", FAIL, {"pair": (i, j)})
    return Check("bimodule")


class BimoduleMap:
    """A matrix between bimodules, verified to commute with the chosen actions."""

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Mat, sided: str = "two-sided"):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"map of shape {matrix.shape} between modules of dims {source.dim}, {target.dim}")
        if not is_module_map(matrix, source, target, sided):
            raise ValueError(f"matrix is not a {sided} module map {source.name} -> {target.name}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.sided = sided

    def __call__(self, v):
        return self.matrix.apply(v)


class TensorProduct(Bimodule):
    """``M ⊗_A N`` realised as the quotient of ``M ⊗_k N`` by ``ma⊗n - m⊗an``.

    Quotient basis vector ``q`` is the class of the simple tensor of basis
    vectors with k-level index ``free[q]``.
    """

    def __init__(self, m: Bimodule, n: Bimodule):
        if m.right_alg is not n.left_alg:
            raise AlgebraMismatch(f"cannot form {m.name} ⊗ {n.name}: {m.right_alg.name} vs {n.left_alg.name}")
        f = m.field
        a = m.right_alg
        big = m.dim * n.dim
        ndim = n.dim
        gens = []
        for k in range(a.dim):
            l_cols = n.left[k].T.rows
            for i in range(m.dim):
                for j in range(ndim):
                    v: dict = {}
                    # (m_i a_k) ⊗ n_j
                    for r, x in _column_items(m.right[k], i):
                        v[r * ndim + j] = v.get(r * ndim + j, 0) + x
                    # - m_i ⊗ (a_k n_j)
                    for s, y in l_cols[j].items():
                        key = i * ndim + s
                        v[key] = v.get(key, 0) - y
                    v = {key: f.norm(x) for key, x in v.items() if f.norm(x)}
                    if v:
                        gens.append(v)
        rel = Subspace.from_vectors(f, big, gens)
        quot = quotient(big, rel)
        proj, sect = quot.projection, quot.section
        i_n = Mat.identity(f, ndim)
        i_m = Mat.identity(f, m.dim)
        left = [proj @ (x.kron(i_n) @ sect) for x in m.left]
        right = [proj @ (i_m.kron(y) @ sect) for y in n.right]
        super().__init__(m.left_alg, n.right_alg, quot.dim, left, right, name=f"{m.name}⊗{n.name}")
        self.factors = (m, n)
        self.quot: QuotientSpace = quot
        self.proj = proj
        self.sect = sect

    def split_index(self, q: int) -> tuple[int, int]:
        """Factor basis indices of the simple tensor representing basis vector ``q``."""
        return divmod(self.quot.free[q], self.factors[1].dim)

    def label(self, q: int) -> str:
        m, n = self.factors
        i, j = self.split_index(q)
        lm = m.label(i)
        ln = n.label(j)
        if isinstance(m, TensorProduct):
            lm = f"({lm})"
        if isinstance(n, TensorProduct):
            ln = f"({ln})"
        return f"{lm}⊗{ln}"

    def simple(self, x: Sequence, y: Sequence) -> list:
        """Quotient coordinates of ``x ⊗ y``."""
        m, n = self.factors
        v = {}
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        v[i * n.dim + j] = self.field.norm(a * b)
        out = [self.field.zero] * self.dim
        p = self.field.p
        for q, row in enumerate(self.proj.rows):
            s = 0
            for c, w in row.items():
                if c in v:
                    s += w * v[c]
            out[q] = s % p if p else s
        return out


def _column_items(m: Mat, j: int):
    for r, row in enumerate(m.rows):
        x = row.get(j)
        if x:
            yield r, x


def tensor(m: Bimodule, n: Bimodule) -> TensorProduct:
    key = ("tensor", id(n))
    hit = m.cache.get(key)
    if hit is None:
        hit = (n, TensorProduct(m, n))
        m.cache[key] = hit
    return hit[1]


def tensor_map(f: Mat, g: Mat, src: TensorProduct, tgt: TensorProduct) -> Mat:
    """``f ⊗ g : src -> tgt`` for f right-linear and g left-linear over the middle algebra."""
    sm, sn = src.factors
    tm, tn = tgt.factors
    if f.shape != (tm.dim, sm.dim) or g.shape != (tn.dim, sn.dim):
        raise ValueError("map shapes do not match the tensor factors")
    return tgt.proj @ (f.kron(g) @ src.sect)


def left_unitor(m: Bimodule) -> Mat:
    """``A ⊗_A M -> M``, ``a ⊗ x -> a x`` where A is the left algebra of M."""
    key = ("lunit",)
    if key not in m.cache:
        t = tensor(m.left_alg.regular(), m)
        k = Mat.hstack(list(m.left))
        m.cache[key] = k @ t.sect
    return m.cache[key]


def left_unitor_inv(m: Bimodule) -> Mat:
    key = ("lunit_inv",)
    if key not in m.cache:
        a = m.left_alg
        t = tensor(a.regular(), m)
        unit = Mat.from_columns(m.field, a.dim, [a.unit])
        m.cache[key] = t.proj @ unit.kron(m.identity())
    return m.cache[key]


def right_unitor(m: Bimodule) -> Mat:
    """``M ⊗_B B -> M``, ``x ⊗ b -> x b`` where B is the right algebra of M."""
    key = ("runit",)
    if key not in m.cache:
        b = m.right_alg
        t = tensor(m, b.regular())
        rows = [{} for _ in range(m.dim)]
        for i, act in enumerate(m.right):
            for r, row in enumerate(act.rows):
                for j, x in row.items():
                    rows[r][j * b.dim + i] = x
        k = Mat(m.field, m.dim, m.dim * b.dim, rows)
        m.cache[key] = k @ t.sect
    return m.cache[key]


def right_unitor_inv(m: Bimodule) -> Mat:
    key = ("runit_inv",)
    if key not in m.cache:
        b = m.right_alg
        t = tensor(m, b.regular())
        unit = Mat.from_columns(m.field, b.dim, [b.unit])
        m.cache[key] = t.proj @ m.identity().kron(unit)
    return m.cache[key]


def associator(l: Bimodule, m: Bimodule, n: Bimodule) -> Mat:
    """``(L ⊗ M) ⊗ N -> L ⊗ (M ⊗ N)``."""
    key = ("assoc", id(m), id(n))
    hit = l.cache.get(key)
    if hit is None:
        lm, mn = tensor(l, m), tensor(m, n)
        x, y = tensor(lm, n), tensor(l, mn)
        il = l.identity()
        i_n = n.identity()
        mat = y.proj @ (il.kron(mn.proj) @ (lm.sect.kron(i_n) @ x.sect))
        hit = (m, n, mat)
        l.cache[key] = hit
    return hit[2]


def associator_inv(l: Bimodule, m: Bimodule, n: Bimodule) -> Mat:
    """``L ⊗ (M ⊗ N) -> (L ⊗ M) ⊗ N``."""
    key = ("assoc_inv", id(m), id(n))
    hit = l.cache.get(key)
    if hit is None:
        lm, mn = tensor(l, m), tensor(m, n)
        x, y = tensor(lm, n), tensor(l, mn)
        mat = x.proj @ (lm.proj.kron(n.identity()) @ (l.identity().kron(mn.sect) @ y.sect))
        hit = (m, n, mat)
        l.cache[key] = hit
    return hit[2]


def restrict(m: Bimodule, left=None, right=None, name: str | None = None) -> Bimodule:
    """Pull actions back along algebra maps ``left=(alg, emb)``, ``right=(alg, emb)``.

    ``emb`` is the matrix of the algebra map into the current acting algebra.
    """
    if left is None:
        lalg, lacts = m.left_alg, m.left
    else:
        lalg, emb = left
        lacts = [m.act_left(emb.column(i)) for i in range(lalg.dim)]
    if right is None:
        ralg, racts = m.right_alg, m.right
    else:
        ralg, emb = right
        racts = [m.act_right(emb.column(i)) for i in range(ralg.dim)]
    return Bimodule(lalg, ralg, m.dim, lacts, racts, name=name or m.name, labels=m.labels)


def direct_sum(mods: Sequence[Bimodule], name: str = "M") -> Bimodule:
    l0, r0 = mods[0].left_alg, mods[0].right_alg
    if any(x.left_alg is not l0 or x.right_alg is not r0 for x in mods):
        raise AlgebraMismatch("direct summands over different algebras")
    left = [block_diag([x.left[i] for x in mods]) for i in range(l0.dim)]
    right = [block_diag([x.right[i] for x in mods]) for i in range(r0.dim)]
    labels = [f"{x.label(i)}@{k}" for k, x in enumerate(mods) for i in range(x.dim)]
    return Bimodule(l0, r0, sum(x.dim for x in mods), left, right, name=name, labels=labels)


# ---------------------------------------------------------------------------
# hom spaces


class HomSpace:
    """All linear maps ``source -> target`` commuting with the requested actions."""

    def __init__(self, source: Bimodule, target: Bimodule, sided: str, space: Subspace):
        self.source = source
        self.target = target
        self.sided = sided
        self.space = space
        self.maps = [Mat.unvec(source.field, target.dim, source.dim, v) for v in space.basis]

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords(self, f: Mat) -> list | None:
        return self.space.coords(f.vec())

    def contains(self, f: Mat) -> bool:
        return self.space.contains(f.vec())

    def combine(self, coeffs: Sequence) -> Mat:
        return Mat.unvec(self.source.field, self.target.dim, self.source.dim, self.space.vector(coeffs))


def _commutation_rows(t_act: Mat, s_act: Mat, tdim: int, sdim: int, p: int):
    # rows of T X - X S = 0 for X vectorised row-major
    s_cols = s_act.T.rows
    for r in range(tdim):
        trow = t_act.rows[r]
        for c in range(sdim):
            d: dict = {}
            for k, x in trow.items():
                d[k * sdim + c] = d.get(k * sdim + c, 0) + x
            for k, y in s_cols[c].items():
                d[r * sdim + k] = d.get(r * sdim + k, 0) - y
            if p:
                d = {key: v % p for key, v in d.items() if v % p}
            else:
                d = {key: v for key, v in d.items() if v}
            if d:
                yield d


def nullspace(fld: Field, ncols: int, rows) -> Subspace:
    rows = list(rows)
    m = Mat(fld, len(rows), ncols, rows)
    return solve_affine(m, [fld.zero] * len(rows)).kernel


def hom_space(source: Bimodule, target: Bimodule, sided: str = "two-sided") -> HomSpace:
    """Basis of the maps commuting with left, right, or both actions."""
    if sided not in ("left", "right", "two-sided"):
        raise ValueError(f"unknown sidedness {sided!r}")
    f = source.field
    tdim, sdim = target.dim, source.dim
    rows = []
    if sided in ("left", "two-sided"):
        if source.left_alg is not target.left_alg:
            raise AlgebraMismatch("left algebras differ")
        for t_act, s_act in zip(target.left, source.left):
            rows.extend(_commutation_rows(t_act, s_act, tdim, sdim, f.p))
    if sided in ("right", "two-sided"):
        if source.right_alg is not target.right_alg:
            raise AlgebraMismatch("right algebras differ")
        for t_act, s_act in zip(target.right, source.right):
            rows.extend(_commutation_rows(t_act, s_act, tdim, sdim, f.p))
    space = nullspace(f, tdim * sdim, rows)
    return HomSpace(source, target, sided, space)


def is_module_map(f: Mat, source: Bimodule, target: Bimodule, sided: str = "two-sided") -> bool:
    if sided in ("left", "two-sided"):
        if any(t @ f != f @ s for t, s in zip(target.left, source.left)):
            return False
    if sided in ("right", "two-sided"):
        if any(t @ f != f @ s for t, s in zip(target.right, source.right)):
            return False
    return True


def centralizer(m: Bimodule) -> Subspace:
    """``{x in M : a x = x a for all a}`` for an (A, A)-bimodule."""
    if m.left_alg is not m.right_alg:
        raise AlgebraMismatch("centralizer needs an (A, A)-bimodule")
    rows = []
    for l, r in zip(m.left, m.right):
        rows.extend(row for row in (l - r).rows if row)
    return nullspace(m.field, m.dim, rows)


# ---------------------------------------------------------------------------
# projectivity and reflexivity


@dataclass
class DualBasis:
    """Finite dual basis ``x = Σ x_i f_i(x)`` (right) or ``x = Σ f_i(x) x_i`` (left)."""

    side: str
    elements: list
    functionals: list

    def __len__(self):
        return len(self.elements)


def _generator_maps(m: Bimodule, side: str, h: HomSpace, generators: list):
    # for generator x_j and functional h_t: matrix of y -> x_j · h_t(y) (or h_t(y) · x_j)
    acts = m.right if side == "right" else m.left
    out = []
    for j, x in enumerate(generators):
        col_j = [act.apply(x) for act in acts]  # act_k x_j
        for t, ht in enumerate(h.maps):
            rows = [{} for _ in range(m.dim)]
            for k, hrow in enumerate(ht.rows):
                if not hrow:
                    continue
                ck = col_j[k]
                for r, y in enumerate(ck):
                    if y:
                        dst = rows[r]
                        for x, v in hrow.items():
                            dst[x] = dst.get(x, 0) + y * v
            p = m.field.p
            rows = [{c: v % p if p else v for c, v in r.items() if (v % p if p else v)} for r in rows]
            out.append((j, t, Mat(m.field, m.dim, m.dim, rows)))
    return out


def replay_dual_basis(m: Bimodule, cert: DualBasis) -> bool:
    acc = Mat.zeros(m.field, m.dim, m.dim)
    for x, fn in zip(cert.elements, cert.functionals):
        acts = m.right if cert.side == "right" else m.left
        # columns: for basis vector b, Σ_k fn(b)_k act_k x
        cols = []
        for b in range(m.dim):
            fb = fn.column(b)
            v = [m.field.zero] * m.dim
            for k, c in enumerate(fb):
                if c:
                    w = acts[k].apply(x)
                    v = [m.field.norm(a + c * z) for a, z in zip(v, w)]
            cols.append(v)
        acc = acc + Mat.from_columns(m.field, m.dim, cols)
    return acc == m.identity()


def dual_module_hom(m: Bimodule, side: str) -> HomSpace:
    """``Hom_B(M_B, B_B)`` for side='right', ``Hom_A(_AM, _AA)`` for side='left'."""
    if side == "right":
        return hom_space(restrict_to_side(m, "right"), m.right_alg.right_regular(), "right")
    return hom_space(restrict_to_side(m, "left"), m.left_alg.left_regular(), "left")


def restrict_to_side(m: Bimodule, side: str) -> Bimodule:
    """Forget the other action (replace it by the ground field)."""
    key = ("side", side)
    if key not in m.cache:
        k = Algebra.ground(m.field)
        ident = (m.identity(),)
        if side == "right":
            m.cache[key] = Bimodule(k, m.right_alg, m.dim, ident, m.right, name=m.name, labels=m.labels)
        else:
            m.cache[key] = Bimodule(m.left_alg, k, m.dim, m.left, ident, name=m.name, labels=m.labels)
    return m.cache[key]


def is_fgp(m: Bimodule, side: str = "right", generators=None) -> DualBasis | None:
    """Dual basis certificate if the one-sided module is projective, else None.

    Splits the free cover on ``generators`` (default: the k-basis of ``m``,
    which always generates) by one linear solve.  A smaller generating set
    that fails to split is retried with the full k-basis.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if m.dim == 0:
        return DualBasis(side, [], [])
    h = dual_module_hom(m, side)
    if h.dim == 0:
        return None
    if generators is not None:
        cert = _split_cover(m, side, h, [list(g) for g in generators])
        if cert is not None:
            return cert
    return _split_cover(m, side, h, [m.basis_vector(j) for j in range(m.dim)])


def _split_cover(m: Bimodule, side: str, h: HomSpace, generators: list) -> DualBasis | None:
    f = m.field
    gens = _generator_maps(m, side, h, generators)
    system = Mat.from_columns(f, m.dim * m.dim, [g.vec() for _, _, g in gens])
    sol = solve_affine(system, m.identity().vec())
    if not sol.feasible:
        return None
    coeffs = sol.particular
    by_gen: dict = {}
    for (j, t, _), c in zip(gens, coeffs):
        if c:
            by_gen.setdefault(j, [f.zero] * h.dim)[t] = c
    elements, functionals = [], []
    for j in sorted(by_gen):
        elements.append(generators[j])
        functionals.append(h.combine(by_gen[j]))
    cert = DualBasis(side, elements, functionals)
    if not replay_dual_basis(m, cert):
        raise ArithmeticError("dual basis certificate failed replay")
    return cert


@dataclass
class Reflexivity:
    reflexive: bool
    dim: int
    dual_dim: int
    double_dual_dim: int
    rank: int


def is_reflexive(m: Bimodule, side: str = "right") -> Reflexivity:
    """Bijectivity of the evaluation map ``M -> M**`` for the one-sided module."""
    f = m.field
    h = dual_module_hom(m, side)
    alg = m.right_alg if side == "right" else m.left_alg
    r = h.dim
    # the dual is a module on the opposite side
    acts = []
    for i in range(alg.dim):
        cols = []
        for ht in h.maps:
            g = alg.lmul[i] @ ht if side == "right" else alg.rmul[i] @ ht
            c = h.coords(g)
            if c is None:
                raise ArithmeticError("dual module not closed under the algebra action")
            cols.append(c)
        acts.append(Mat.from_columns(f, r, cols))
    k = Algebra.ground(f)
    ident = (Mat.identity(f, r),)
    if side == "right":
        dual = Bimodule(alg, k, r, acts, ident, name=m.name + "*")
        hh = hom_space(dual, alg.left_regular(), "left")
    else:
        dual = Bimodule(k, alg, r, ident, acts, name="*" + m.name)
        hh = hom_space(dual, alg.right_regular(), "right")
    cols = []
    for b in range(m.dim):
        phi = Mat.from_columns(f, alg.dim, [ht.column(b) for ht in h.maps])
        c = hh.coords(phi)
        if c is None:
            raise ArithmeticError("evaluation map leaves the double dual")
        cols.append(c)
    ev = Mat.from_columns(f, hh.dim, cols) if cols else Mat.zeros(f, hh.dim, 0)
    rank = ev.rank()
    return Reflexivity(hh.dim == m.dim and rank == m.dim, m.dim, r, hh.dim, rank)


def map_check(name: str, lhs: Mat, rhs: Mat, source: Bimodule, target: Bimodule) -> Check:
    return compare(name, lhs, rhs, source.label, target.label)


def fix_right(t: TensorProduct, y) -> Mat:
    """Matrix of ``x -> x ⊗ y`` from the first factor into ``t``."""
    m, n = t.factors
    return t.proj @ m.identity().kron(Mat.from_columns(t.field, n.dim, [list(y)]))


def fix_left(t: TensorProduct, x) -> Mat:
    """Matrix of ``y -> x ⊗ y`` from the second factor into ``t``."""
    m, n = t.factors
    return t.proj @ Mat.from_columns(t.field, m.dim, [list(x)]).kron(n.identity())
