"""Exact scalars and sparse linear algebra over Q and prime fields.

Matrices are stored as a list of sparse rows (``{column: value}`` dicts with
no explicit zeros).  Vectors are plain Python lists.  Every elimination
chooses the leftmost available pivot, so all outputs are reproducible.

Rationals are ``gmpy2.mpq`` values; prime-field elements are ``int`` in
``[0, p)``.  Randomness always comes from :class:`random.Random` (the
Mersenne Twister MT19937) seeded explicitly by the caller.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq

DEFAULT_PRIME = 10007


class Field:
    """The rationals (``Field()``) or the prime field F_p (``Field(p)``)."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and (p < 2 or not gmpy2.is_prime(p)):
            raise ValueError(f"{p} is not prime")
        self.p = int(p)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.p})" if self.p else "Field()"

    @property
    def name(self) -> str:
        return f"fp:{self.p}" if self.p else "q"

    @property
    def zero(self):
        return 0 if self.p else mpq(0)

    @property
    def one(self):
        return 1 if self.p else mpq(1)

    def __call__(self, x):
        """Coerce an int, string literal, Fraction or mpq into this field."""
        if isinstance(x, str):
            x = mpq(x.strip())
        if self.p:
            if isinstance(x, int):
                return x % self.p
            if isinstance(x, Fraction):
                x = mpq(x.numerator, x.denominator)
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def norm(self, x):
        return x % self.p if self.p else x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(int(x), self.p - 2, self.p)
        return 1 / mpq(x)

    def random(self, rng: random.Random, bound: int = 3):
        """A random scalar: uniform on F_p, or an integer in [-bound, bound] over Q."""
        if self.p:
            return rng.randrange(self.p)
        return mpq(rng.randint(-bound, bound))

    def format(self, x) -> str:
        if self.p:
            return str(int(x))
        x = mpq(x)
        if x.denominator == 1:
            return str(int(x.numerator))
        return f"{int(x.numerator)}/{int(x.denominator)}"


QQ = Field()


def _add_into(acc: dict, row: dict, coef, p: int) -> None:
    # acc += coef * row, dropping zeros
    if p:
        for k, x in row.items():
            v = (acc.get(k, 0) + coef * x) % p
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    else:
        for k, x in row.items():
            v = acc.get(k, 0) + coef * x
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)


class Mat:
    """Sparse exact matrix; treat instances as immutable."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: list[dict] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise ValueError("row count does not match nrows")

    # construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def from_dense(cls, field, data: Sequence[Sequence], ncols: int | None = None):
        data = list(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            rows.append({j: v for j, v in ((j, field(x)) for j, x in enumerate(r)) if v})
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field, nrows: int, columns: Sequence[Sequence]):
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(col):
                if x:
                    rows[i][j] = x
        return cls(field, nrows, len(columns), rows)

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries: dict):
        rows = [{} for _ in range(nrows)]
        for (i, j), x in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            x = field(x)
            if x:
                rows[i][j] = x
        return cls(field, nrows, ncols, rows)

    # access ---------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self) -> list[list]:
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> list:
        z = self.field.zero
        return [r.get(j, z) for r in self.rows]

    def columns(self) -> list[list]:
        z = self.field.zero
        cols = [[z] * self.nrows for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def entries(self):
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                yield i, j, r[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def vec(self) -> list:
        """Row-major flattening."""
        out = [self.field.zero] * (self.nrows * self.ncols)
        for i, r in enumerate(self.rows):
            base = i * self.ncols
            for j, x in r.items():
                out[base + j] = x
        return out

    @classmethod
    def unvec(cls, field, nrows, ncols, v: Sequence):
        rows = []
        for i in range(nrows):
            base = i * ncols
            rows.append({j: v[base + j] for j in range(ncols) if v[base + j]})
        return cls(field, nrows, ncols, rows)

    # arithmetic -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz}, {self.field.name})"

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        p = self.field.p
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            _add_into(r, b, 1, p)
            rows.append(r)
        return Mat(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        p = self.field.p
        minus = p - 1 if p else -1
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            _add_into(r, b, minus, p)
            rows.append(r)
        return Mat(self.field, self.nrows, self.ncols, rows)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "Mat":
        f = self.field
        s = f(s)
        if not s:
            return Mat.zeros(f, self.nrows, self.ncols)
        rows = [{j: f.norm(s * x) for j, x in r.items()} for r in self.rows]
        return Mat(f, self.nrows, self.ncols, rows)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            p = self.field.p
            orows = other.rows
            out = []
            for r in self.rows:
                acc: dict = {}
                for k, a in r.items():
                    ok = orows[k]
                    if ok:
                        for j, b in ok.items():
                            acc[j] = acc.get(j, 0) + a * b
                if p:
                    acc = {j: v % p for j, v in acc.items() if v % p}
                else:
                    acc = {j: v for j, v in acc.items() if v}
                out.append(acc)
            return Mat(self.field, self.nrows, other.ncols, out)
        return self.apply(other)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        p = self.field.p
        out = []
        for r in self.rows:
            s = 0
            for j, x in r.items():
                s += x * v[j]
            out.append(s % p if p else mpq(s))
        return out

    @property
    def T(self) -> "Mat":
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                rows[j][i] = x
        return Mat(self.field, self.ncols, self.nrows, rows)

    def kron(self, other: "Mat") -> "Mat":
        p = self.field.p
        bn, bm = other.nrows, other.ncols
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                r = {}
                for j, a in ra.items():
                    base = j * bm
                    for l, b in rb.items():
                        v = a * b
                        if p:
                            v %= p
                        r[base + l] = v
                rows.append(r)
        return Mat(self.field, self.nrows * bn, self.ncols * bm, rows)

    @staticmethod
    def hstack(mats: Sequence["Mat"]) -> "Mat":
        f = mats[0].field
        n = mats[0].nrows
        rows = [{} for _ in range(n)]
        off = 0
        for m in mats:
            if m.nrows != n:
                raise ValueError("hstack row mismatch")
            for i, r in enumerate(m.rows):
                for j, x in r.items():
                    rows[i][off + j] = x
            off += m.ncols
        return Mat(f, n, off, rows)

    @staticmethod
    def vstack(mats: Sequence["Mat"]) -> "Mat":
        f = mats[0].field
        m0 = mats[0].ncols
        rows = []
        for m in mats:
            if m.ncols != m0:
                raise ValueError("vstack column mismatch")
            rows.extend(dict(r) for r in m.rows)
        return Mat(f, len(rows), m0, rows)

    def select_columns(self, cols: Sequence[int]) -> "Mat":
        pos = {c: k for k, c in enumerate(cols)}
        rows = [{pos[j]: x for j, x in r.items() if j in pos} for r in self.rows]
        return Mat(self.field, self.nrows, len(cols), rows)

    def rank(self) -> int:
        ech = Echelon(self.field)
        for r in self.rows:
            ech.add(r)
        return len(ech.rows)

    def to_field(self, field: Field) -> "Mat":
        rows = [{j: v for j, v in ((j, field(x)) for j, x in r.items()) if v} for r in self.rows]
        return Mat(field, self.nrows, self.ncols, rows)


class Echelon:
    """Incrementally maintained reduced row echelon basis (pivot -> row)."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: dict | None = None):
        self.field = field
        self.rows: dict[int, dict] = rows if rows is not None else {}

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        rows = self.rows
        p = self.field.p
        for c in [c for c in v if c in rows]:
            coef = v.get(c)
            if coef:
                _add_into(v, rows[c], (p - coef) if p else -coef, p)
        return v

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        f = self.field
        piv = min(r)
        inv = f.inv(r[piv])
        r = {k: f.norm(x * inv) for k, x in r.items()}
        p = f.p
        for row in self.rows.values():
            coef = row.get(piv)
            if coef:
                _add_into(row, r, (p - coef) if p else -coef, p)
        self.rows[piv] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def sorted_rows(self) -> list[dict]:
        return [self.rows[c] for c in sorted(self.rows)]


def _as_sparse(v) -> dict:
    if isinstance(v, dict):
        return {k: x for k, x in v.items() if x}
    return {i: x for i, x in enumerate(v) if x}


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    ech = Echelon(m.field)
    for r in m.rows:
        ech.add(r)
    piv = ech.pivots()
    rows = [dict(ech.rows[c]) for c in piv]
    rows += [{} for _ in range(m.nrows - len(rows))]
    return Mat(m.field, m.nrows, m.ncols, rows), piv


class Subspace:
    """A subspace of F^n, stored by its reduced echelon basis."""

    __slots__ = ("field", "ambient", "_ech")

    def __init__(self, field: Field, ambient: int, ech: Echelon):
        self.field = field
        self.ambient = ambient
        self._ech = ech

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Iterable) -> "Subspace":
        ech = Echelon(field)
        for v in vectors:
            sv = _as_sparse(v)
            if sv and max(sv) >= ambient:
                raise ValueError("vector longer than ambient space")
            ech.add(sv)
        return cls(field, ambient, ech)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, Echelon(field))

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, Echelon(field, {i: {i: field.one} for i in range(ambient)}))

    @property
    def dim(self) -> int:
        return len(self._ech.rows)

    @property
    def pivots(self) -> list[int]:
        return self._ech.pivots()

    @property
    def rows(self) -> list[dict]:
        return self._ech.sorted_rows()

    @property
    def basis(self) -> list[list]:
        z = self.field.zero
        out = []
        for r in self.rows:
            v = [z] * self.ambient
            for j, x in r.items():
                v[j] = x
            out.append(v)
        return out

    def basis_matrix(self) -> Mat:
        """Columns are the basis vectors (ambient x dim)."""
        return Mat(self.field, self.dim, self.ambient, [dict(r) for r in self.rows]).T

    def contains(self, v) -> bool:
        return not self._ech.reduce(_as_sparse(v))

    def coords(self, v) -> list | None:
        """Coordinates of ``v`` in the echelon basis, or None if ``v`` is outside."""
        sv = _as_sparse(v)
        if self._ech.reduce(sv):
            return None
        z = self.field.zero
        return [sv.get(c, z) for c in self.pivots]

    def coords_matrix(self) -> Mat:
        """Matrix (dim x ambient) sending vectors of the subspace to their coordinates."""
        piv = self.pivots
        return Mat(self.field, len(piv), self.ambient, [{c: self.field.one} for c in piv])

    def vector(self, coords: Sequence) -> list:
        z = self.field.zero
        out = [z] * self.ambient
        p = self.field.p
        for t, r in zip(coords, self.rows):
            if t:
                for j, x in r.items():
                    out[j] = out[j] + t * x
        if p:
            out = [x % p for x in out]
        return out

    def __add__(self, other: "Subspace") -> "Subspace":
        ech = Echelon(self.field, {c: dict(r) for c, r in self._ech.rows.items()})
        for r in other.rows:
            ech.add(r)
        return Subspace(self.field, self.ambient, ech)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(m: Mat) -> Subspace:
    return solve_affine(m, [m.field.zero] * m.nrows).kernel


def image(m: Mat) -> Subspace:
    return Subspace.from_vectors(m.field, m.nrows, m.T.rows)


@dataclass(frozen=True)
class AffineSolution:
    """Solution set ``particular + kernel`` of a linear system, or infeasible."""

    field: Field
    particular: list | None
    kernel: Subspace

    @property
    def feasible(self) -> bool:
        return self.particular is not None

    def __bool__(self):
        return self.feasible

    def contains(self, x: Sequence) -> bool:
        if self.particular is None:
            return False
        p = self.field.p
        d = [a - b for a, b in zip(x, self.particular)]
        if p:
            d = [v % p for v in d]
        return self.kernel.contains(d)


def solve_affine(a: Mat, b: Sequence) -> AffineSolution:
    """Solve ``a x = b`` exactly.

    Infeasibility is reported by ``particular=None``; the kernel of ``a`` is
    returned in both cases.
    """
    if a.nrows != len(b):
        raise ValueError(f"system has {a.nrows} rows but rhs has length {len(b)}")
    f = a.field
    n = a.ncols
    ech = Echelon(f)
    infeasible = False
    for r, bi in zip(a.rows, b):
        row = dict(r)
        bi = f.norm(bi)
        if bi:
            row[n] = bi
        ech.add(row)
    if n in ech.rows:
        infeasible = True
        del ech.rows[n]
    piv = set(ech.rows)
    z = f.zero
    particular = None
    if not infeasible:
        particular = [z] * n
        for c, row in ech.rows.items():
            particular[c] = row.get(n, z)
    kvecs = []
    minus = (lambda x: (f.p - x) % f.p) if f.p else (lambda x: -x)
    for free in range(n):
        if free in piv:
            continue
        v = {free: f.one}
        for c, row in ech.rows.items():
            x = row.get(free)
            if x:
                v[c] = minus(x)
        kvecs.append(v)
    ker = Subspace.from_vectors(f, n, kvecs)
    # substitution check
    if particular is not None and a.apply(particular) != [f(x) for x in b]:
        raise ArithmeticError("solve_affine produced a non-solution")
    if kvecs and not (a @ Mat(f, len(kvecs), n, kvecs).T).is_zero():
        raise ArithmeticError("solve_affine produced a non-kernel vector")
    return AffineSolution(f, particular, ker)


def random_element(sol: AffineSolution, seed: int, bound: int = 3) -> list:
    """``particular + sum r_i k_i`` with ``r_i`` drawn from MT19937 seeded by ``seed``."""
    if not sol.feasible:
        raise ValueError("cannot sample from an empty solution set")
    f = sol.field
    rng = random.Random(seed)
    out = list(sol.particular)
    for k in sol.kernel.basis:
        r = f.random(rng, bound)
        if r:
            out = [f.norm(x + r * y) for x, y in zip(out, k)]
    return out


@dataclass(frozen=True)
class QuotientSpace:
    """F^ambient modulo a relation subspace, with projection and section.

    Quotient coordinates are the non-pivot ambient coordinates of the
    relation subspace, so each quotient basis vector is the class of an
    ambient basis vector (``free[q]``).
    """

    ambient: int
    relations: Subspace
    free: tuple
    projection: Mat
    section: Mat

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def field(self) -> Field:
        return self.relations.field


def quotient(ambient: int, relations: Subspace) -> QuotientSpace:
    f = relations.field
    if relations.ambient != ambient:
        raise ValueError("relations do not live in the ambient space")
    rows = relations.rows
    piv = relations.pivots
    pivset = set(piv)
    free = tuple(c for c in range(ambient) if c not in pivset)
    qpos = {c: q for q, c in enumerate(free)}
    proj_rows = [{c: f.one} for c in free]
    p = f.p
    for pc, r in zip(piv, rows):
        for c, x in r.items():
            if c in qpos:
                proj_rows[qpos[c]][pc] = (p - x) % p if p else -x
    proj = Mat(f, len(free), ambient, proj_rows)
    sect_rows = [{} for _ in range(ambient)]
    for q, c in enumerate(free):
        sect_rows[c][q] = f.one
    sect = Mat(f, ambient, len(free), sect_rows)
    return QuotientSpace(ambient, relations, free, proj, sect)


def rational_reconstruction(a: int, p: int) -> mpq | None:
    """Smallest-height fraction n/d with n = a d mod p (|n|, d <= sqrt(p/2))."""
    a %= p
    bound = int(gmpy2.isqrt(p // 2))
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gmpy2.gcd(r1, s1) != 1:
        return None
    return mpq(r1, s1)


def inverse(m: Mat) -> Mat | None:
    """Inverse of a square matrix, or None when it is singular."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    f = m.field
    n = m.nrows
    cols = []
    for j in range(n):
        e = [f.zero] * n
        e[j] = f.one
        sol = solve_affine(m, e)
        if not sol.feasible or sol.kernel.dim:
            return None
        cols.append(sol.particular)
    return Mat.from_columns(f, n, cols)
