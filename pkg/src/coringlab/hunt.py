"""Randomised search for biseparable corings that are not Frobenius.

Trials run over F_p and are drawn from four families:

* ``zoo``: a zoo fixture conjugated by a random bimodule automorphism;
* ``sweedler``: the Sweedler coring of a random subalgebra of a small algebra;
* ``base``: ``A ⊗ H*`` for a small algebra ``H`` (the dual coalgebra, base-extended);
* ``dirsum``: direct sums of two of the above over the same algebra.

Each trial owns a generator seeded by ``(seed, index)``, so logs are
reproducible and independent of evaluation order.  A biseparable
non-Frobenius hit is dumped as a presentation file and re-audited over
the rationals after rational reconstruction of every entry.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from pathlib import Path

from .checks import FAIL, PASS
from .corings import Coring, check_coring, direct_sum_coring, is_cosplit, solve_cointegral, sweedler_coring, trivial_coring
from .duality import is_coring_frobenius
from .exact import DEFAULT_PRIME, Field, Mat, Subspace, inverse, rational_reconstruction
from .extension import RingExtension
from .findim import Algebra, Bimodule, hom_space, is_fgp, tensor, tensor_map
from .presentation import Decl, ParseError, Presentation, coring_presentation, parse_presentation, print_presentation
from .zoo import zoo

log = logging.getLogger(__name__)

FAMILIES = ("zoo", "sweedler", "base", "dirsum")
ARTIFACT = "field-specific artifact, unresolved"


@dataclass
class HuntConfig:
    seed: int = 7
    budget: int = 100
    max_dim_a: int = 4
    max_dim_c: int = 8
    field: Field = field(default_factory=lambda: Field(DEFAULT_PRIME))
    out: Path | None = None


@dataclass
class Trial:
    index: int
    family: str
    source: str
    dim_a: int = 0
    dim_c: int = 0
    verdict: dict = field(default_factory=dict)
    consistent: bool | None = None
    skipped: str = ""

    def line(self) -> str:
        head = f"trial {self.index:04d} {self.family}:{self.source}"
        if self.skipped:
            return f"{head} skipped ({self.skipped})"
        flags = " ".join(f"{k}={_short(v)}" for k, v in self.verdict.items())
        tail = "" if self.consistent is None else f" golden={'ok' if self.consistent else 'MISMATCH'}"
        return f"{head} dimA={self.dim_a} dimC={self.dim_c} {flags}{tail}"


def _short(v) -> str:
    if v is True:
        return "1"
    if v is False:
        return "0"
    return str(v)


@dataclass
class HuntResult:
    log: list
    stats: dict
    trials: list
    counterexamples: list


# ---------------------------------------------------------------------------
# small algebras over an arbitrary field


def _unit_matrix(n, i, j):
    return {(i, j): 1}


def _matalg(f: Field, n: int, entries: list[dict], name: str) -> Algebra:
    mats = [Mat.from_entries(f, n, n, e) for e in entries]
    return Algebra.from_basis_matrices(f, mats, Mat.identity(f, n), name=name)


def algebra_pool(f: Field) -> dict[str, Algebra]:
    """Algebras of dimension at most four used as raw material."""
    k = Algebra.ground(f)
    diag2 = [{(0, 0): 1}, {(1, 1): 1}]
    diag3 = [{(0, 0): 1}, {(1, 1): 1}, {(2, 2): 1}]
    dual = [{(0, 0): 1, (1, 1): 1}, {(0, 1): 1}]
    gauss = [{(0, 0): 1, (1, 1): 1}, {(0, 1): -1, (1, 0): 1}]
    c2 = [{(0, 0): 1, (1, 1): 1}, {(0, 1): 1, (1, 0): 1}]
    tri = [{(0, 0): 1}, {(0, 1): 1}, {(1, 1): 1}]
    trunc = [{(0, 0): 1, (1, 1): 1, (2, 2): 1}, {(0, 1): 1, (1, 2): 1}, {(0, 2): 1}]
    m2 = [{(i, j): 1} for i in range(2) for j in range(2)]
    return {
        "k": k,
        "kxk": _matalg(f, 2, diag2, "kxk"),
        "D": _matalg(f, 2, dual, "D"),
        "G": _matalg(f, 2, gauss, "G"),
        "C2": _matalg(f, 2, c2, "C2"),
        "k3": _matalg(f, 3, diag3, "k3"),
        "T2": _matalg(f, 2, tri, "T2"),
        "N3": _matalg(f, 3, trunc, "N3"),
        "M2": _matalg(f, 2, m2, "M2"),
    }


def generated_subalgebra(a: Algebra, gens: list, name: str = "B") -> tuple[Algebra, Mat]:
    """The subalgebra generated by ``1`` and ``gens``, with its inclusion matrix."""
    f = a.field
    space = Subspace.from_vectors(f, a.dim, [a.unit] + list(gens))
    while True:
        basis = space.basis
        grown = Subspace.from_vectors(f, a.dim, basis + [a.mul(x, y) for x in basis for y in basis])
        if grown.dim == space.dim:
            break
        space = grown
    basis = space.basis
    prods = [[space.coords(a.mul(x, y)) for y in basis] for x in basis]
    sub = Algebra(f, len(basis), prods, space.coords(a.unit), name=name)
    return sub, Mat.from_columns(f, a.dim, basis)


def dual_coalgebra_coring(a: Algebra, h: Algebra, name: str = "C") -> Coring:
    """``A ⊗ H*`` with ``Δ(x⊗φ) = Σ (x⊗φ₁)⊗(1⊗φ₂)`` and ``ε(x⊗φ) = φ(1)x``."""
    f = a.field
    n, m = a.dim, h.dim
    eye = Mat.identity(f, m)
    car = Bimodule(a, a, n * m, [x.kron(eye) for x in a.lmul], [x.kron(eye) for x in a.rmul], name=name)
    cc = tensor(car, car)
    dcols, ecols = [], []
    for x in range(n):
        for c in range(m):
            col = [f.zero] * cc.dim
            for i in range(m):
                for j in range(m):
                    coef = h.products[i][j][c]
                    if coef:
                        u = [f.zero] * car.dim
                        u[x * m + i] = f.one
                        v = [f.zero] * car.dim
                        for t, y in enumerate(a.unit):
                            if y:
                                v[t * m + j] = y
                        col = [f.norm(s + coef * w) for s, w in zip(col, cc.simple(u, v))]
            dcols.append(col)
            ecols.append([f.norm(h.unit[c] * y) for y in a.basis_vector(x)])
    return Coring(car, Mat.from_columns(f, cc.dim, dcols), Mat.from_columns(f, n, ecols), name=name)


def conjugate(c: Coring, phi: Mat, phi_inv: Mat, name: str | None = None) -> Coring:
    """Transport the structure of ``c`` along a bimodule automorphism ``phi``."""
    delta = tensor_map(phi, phi, c.cc, c.cc) @ (c.coproduct @ phi_inv)
    counit = c.counit @ phi_inv if c.counit is not None else None
    return Coring(c.carrier, delta, counit, name=name or c.name)


def random_automorphism(c: Coring, rng: random.Random, tries: int = 8) -> tuple[Mat, Mat] | None:
    hom = hom_space(c.carrier, c.carrier, "two-sided")
    f = c.field
    for _ in range(tries):
        phi = hom.combine([f.random(rng, 3) for _ in range(hom.dim)])
        inv = inverse(phi)
        if inv is not None:
            return phi, inv
    return None


# ---------------------------------------------------------------------------
# trials


def _zoo_over(f: Field) -> dict:
    out = {}
    for name, fx in zoo().items():
        text = print_presentation(fx.presentation).replace("field q", f"field {f.name}", 1)
        out[name] = (parse_presentation(text), fx.golden)
    return out


class _Context:
    def __init__(self, cfg: HuntConfig):
        self.cfg = cfg
        self.field = cfg.field
        self.pool = {k: v for k, v in algebra_pool(cfg.field).items() if v.dim <= cfg.max_dim_a}
        self._zoo = None

    @property
    def zoo(self):
        if self._zoo is None:
            self._zoo = {
                n: v
                for n, v in _zoo_over(self.field).items()
                if v[0]["C"].alg.dim <= self.cfg.max_dim_a and v[0]["C"].dim <= self.cfg.max_dim_c
            }
        return self._zoo


def _make(ctx: _Context, family: str, rng: random.Random) -> tuple[str, Coring | None, dict | None]:
    f = ctx.field
    if family == "zoo":
        name = rng.choice(sorted(ctx.zoo))
        pres, golden = ctx.zoo[name]
        c = pres["C"]
        auto = random_automorphism(c, rng)
        if auto is None:
            return name, c, golden
        return name, conjugate(c, *auto, name=f"{name}_conj"), golden
    if family == "sweedler":
        an = rng.choice(sorted(ctx.pool))
        a = ctx.pool[an]
        gen = [f(rng.randint(-2, 2)) for _ in range(a.dim)]
        b, emb = generated_subalgebra(a, [gen])
        if b.dim == a.dim:
            return f"{an}/{an}", trivial_coring(a), None
        return f"{an}/B{b.dim}", sweedler_coring(RingExtension(b, a, emb)), None
    if family == "base":
        an = rng.choice(sorted(ctx.pool))
        hn = rng.choice(sorted(k for k, v in ctx.pool.items() if v.dim <= 3))
        a, h = ctx.pool[an], ctx.pool[hn]
        if a.dim * h.dim > ctx.cfg.max_dim_c:
            return f"{an}*{hn}", None, None
        return f"{an}*{hn}", dual_coalgebra_coring(a, h), None
    # dirsum: trivial piece plus a Sweedler or base-extended piece over the same algebra
    an = rng.choice(sorted(ctx.pool))
    a = ctx.pool[an]
    other = rng.choice(["trivial", "sweedler", "base"])
    if other == "trivial":
        second, tag = trivial_coring(a), "T"
    elif other == "sweedler":
        gen = [f(rng.randint(-2, 2)) for _ in range(a.dim)]
        b, emb = generated_subalgebra(a, [gen])
        second = trivial_coring(a) if b.dim == a.dim else sweedler_coring(RingExtension(b, a, emb))
        tag = f"S{b.dim}"
    else:
        hn = rng.choice(sorted(k for k, v in ctx.pool.items() if v.dim <= 2))
        second, tag = dual_coalgebra_coring(a, ctx.pool[hn]), f"H{hn}"
    if a.dim + second.dim > ctx.cfg.max_dim_c:
        return f"{an}+{tag}", None, None
    return f"{an}+{tag}", direct_sum_coring([trivial_coring(a), second]), None


GOLDEN_KEYS = ("coseparable", "cosplit", "fgp_left", "fgp_right", "biseparable", "frobenius")


def classify(c: Coring, seed: int = 0) -> dict:
    """Stage flags for one coring; Frobenius is only tested on biseparable ones."""
    v = {"coring": all(x.status != FAIL for x in check_coring(c))}
    if not v["coring"]:
        return v
    v["coseparable"] = solve_cointegral(c) is not None
    v["cosplit"] = is_cosplit(c) is not None
    v["fgp_left"] = is_fgp(c.carrier, "left") is not None
    v["fgp_right"] = is_fgp(c.carrier, "right") is not None
    v["biseparable"] = all(v[k] for k in ("coseparable", "cosplit", "fgp_left", "fgp_right"))
    if v["biseparable"]:
        fro = is_coring_frobenius(c, cross_check=True, seed=seed)
        v["frobenius"] = fro.status
        v["routes_agree"] = fro.agree
    return v


def run_trial(ctx: _Context, index: int) -> tuple[Trial, Coring | None]:
    rng = random.Random(f"{ctx.cfg.seed}:{index}")
    family = rng.choice(FAMILIES)
    source, c, golden = _make(ctx, family, rng)
    t = Trial(index, family, source)
    if c is None:
        t.skipped = "dimension cap"
        return t, None
    t.dim_a, t.dim_c = c.alg.dim, c.dim
    if c.alg.dim > ctx.cfg.max_dim_a or c.dim > ctx.cfg.max_dim_c:
        t.skipped = "dimension cap"
        return t, None
    t.verdict = classify(c, seed=index)
    if golden is not None:
        t.consistent = all(t.verdict.get(k) == golden[k] for k in GOLDEN_KEYS if k in t.verdict and k in golden)
    return t, c


# ---------------------------------------------------------------------------
# re-audit over Q


def lift_presentation(p: Presentation) -> Presentation | None:
    """Rational reconstruction of every scalar; None when some entry has no small lift."""
    if not p.field.p:
        return p
    mod = p.field.p

    def lift(x):
        q = rational_reconstruction(int(x), mod)
        if q is None:
            raise ValueError
        return q

    def walk(obj):
        if isinstance(obj, tuple):
            return tuple(walk(x) for x in obj)
        if isinstance(obj, int) and not isinstance(obj, bool):
            return lift(obj)
        return obj

    from .exact import QQ

    decls = []
    try:
        for d in p.decls:
            body = tuple(
                tuple(walk(x) if i > 0 and isinstance(x, tuple) else x for i, x in enumerate(item)) for item in d.body
            )
            decls.append(Decl(d.kind, d.name, d.args, body))
    except ValueError:
        return None
    return Presentation(QQ, decls)


def audit_over_q(p: Presentation) -> str:
    lifted = lift_presentation(p)
    if lifted is None:
        return ARTIFACT
    try:
        q = parse_presentation(print_presentation(lifted))
    except ParseError:
        return ARTIFACT
    v = classify(q["C"])
    if v.get("biseparable") and v.get("frobenius") == FAIL:
        return "confirmed over Q"
    return "field-specific artifact (not reproduced over Q)"


# ---------------------------------------------------------------------------
# driver


def hunt_conjecture(cfg: HuntConfig) -> HuntResult:
    stats = {"trials": 0, "skipped": 0, "corings": 0, "biseparable": 0, "frobenius": 0, "counterexamples": 0, "golden_mismatch": 0}
    lines, trials, hits = [], [], []
    if cfg.budget <= 0:
        return HuntResult([], stats, [], [])
    ctx = _Context(cfg)
    for index in range(cfg.budget):
        t, c = run_trial(ctx, index)
        trials.append(t)
        stats["trials"] += 1
        if t.skipped:
            stats["skipped"] += 1
        elif t.verdict.get("coring"):
            stats["corings"] += 1
            if t.verdict.get("biseparable"):
                stats["biseparable"] += 1
                if t.verdict.get("frobenius") == PASS:
                    stats["frobenius"] += 1
                elif t.verdict.get("frobenius") == FAIL:
                    stats["counterexamples"] += 1
                    hits.append(_dump(cfg, t, c))
        if t.consistent is False:
            stats["golden_mismatch"] += 1
        lines.append(t.line())
        log.debug(lines[-1])
    lines.append("stats " + " ".join(f"{k}={v}" for k, v in stats.items()))
    for h in hits:
        lines.append(f"hit {h['trial']:04d} {h['audit']}" + (f" {h['path']}" if h["path"] else ""))
    return HuntResult(lines, stats, trials, hits)


def _dump(cfg: HuntConfig, t: Trial, c: Coring) -> dict:
    pres = coring_presentation(c)
    text = print_presentation(pres)
    path = None
    if cfg.out is not None:
        cfg.out.mkdir(parents=True, exist_ok=True)
        path = cfg.out / f"hit_{cfg.seed}_{t.index:04d}.pres"
        path.write_text(text)
    return {"trial": t.index, "audit": audit_over_q(pres), "path": str(path) if path else "", "text": text}
