"""Line-oriented presentation files: parser, printer and object builder.

A file is a sequence of declarations; ``#`` starts a comment.  Example::

    field q
    algebra A 2
      labels one i
      unit 1 0
      mul one one : 1 0
      mul one i : 0 1
      mul i one : 0 1
      mul i i : -1 0
    end
    algebra K 1
      unit 1
      mul 0 0 : 1
    end
    extension E K A
      embed 2x1 [1; 0]
    end
    coring C sweedler E
    element g C : 1 0 0 0

Matrices are written ``RxC [row; row; ...]`` or sparse ``RxC {i,j:v ...}``.
Scalars are integers or fractions such as ``-3/4``.  Products not listed in
an algebra block are zero.  An ``explicit`` coring gives its coproduct with
rows indexed by the simple tensors ``c_i ⊗ c_j`` (row ``i*n + j``).  Element
coordinates refer to the k-basis of the carrier; for a Sweedler coring that
is the simple tensors ``a_i ⊗ a_j`` of the total algebra, index ``i*dim + j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .checks import FAIL
from .corings import Coring, check_coring, direct_sum_coring, sweedler_coring, trivial_coring
from .exact import QQ, Field, Mat
from .extension import RingExtension, check_extension
from .findim import Algebra, Bimodule, TensorProduct, check_algebra, check_bimodule

NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
TOKEN = re.compile(r"\S+")
DIMS = re.compile(r"(\d+)x(\d+)$")


class ParseError(Exception):
    """A located diagnostic; ``kind`` is ``"syntax"`` or ``"semantic"``."""

    def __init__(self, line: int, col: int, msg: str, kind: str = "syntax"):
        super().__init__(f"{line}:{col}: {kind} error: {msg}")
        self.line = line
        self.col = col
        self.msg = msg
        self.kind = kind


@dataclass
class Decl:
    kind: str
    name: str
    args: tuple
    body: tuple = ()
    line: int = field(default=0, compare=False)
    col: int = field(default=1, compare=False)


@dataclass
class Presentation:
    field: Field
    decls: list
    objects: dict = field(default_factory=dict, compare=False)

    def __getitem__(self, name):
        return self.objects[name]

    def names(self, kind: str) -> list[str]:
        return [d.name for d in self.decls if d.kind == kind]

    def decl(self, name: str) -> Decl:
        for d in self.decls:
            if d.name == name:
                return d
        raise KeyError(name)


# ---------------------------------------------------------------------------
# lexing


@dataclass
class Tok:
    text: str
    line: int
    col: int


def _tokens(line: str, lineno: int) -> list[Tok]:
    line = line.split("#", 1)[0]
    return [Tok(m.group(), lineno, m.start() + 1) for m in TOKEN.finditer(line)]


class _Cursor:
    def __init__(self, toks: list[Tok], lineno: int, width: int):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.width = width

    def more(self) -> bool:
        return self.i < len(self.toks)

    def peek(self) -> Tok | None:
        return self.toks[self.i] if self.more() else None

    def next(self, what: str) -> Tok:
        if not self.more():
            raise ParseError(self.lineno, self.width + 1, f"expected {what}")
        t = self.toks[self.i]
        self.i += 1
        return t

    def rest(self) -> list[Tok]:
        out = self.toks[self.i :]
        self.i = len(self.toks)
        return out

    def done(self):
        if self.more():
            t = self.peek()
            raise ParseError(t.line, t.col, f"unexpected token {t.text!r}")


def _name(t: Tok) -> str:
    if not NAME.match(t.text):
        raise ParseError(t.line, t.col, f"{t.text!r} is not an identifier")
    return t.text


def _int(t: Tok) -> int:
    if not t.text.isdigit():
        raise ParseError(t.line, t.col, f"expected a non-negative integer, got {t.text!r}")
    return int(t.text)


def _scalar(f: Field, text: str, line: int, col: int):
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ParseError(line, col, f"{text!r} is not an integer or fraction literal")
    if text.endswith("/0"):
        raise ParseError(line, col, "zero denominator", "semantic")
    try:
        return f(text)
    except ZeroDivisionError as exc:
        raise ParseError(line, col, str(exc), "semantic") from None


def _vector(f: Field, toks: list[Tok]) -> tuple:
    return tuple(_scalar(f, t.text, t.line, t.col) for t in toks)


def _matrix(f: Field, cur: _Cursor) -> tuple:
    """Parse ``RxC [..]`` or ``RxC {..}`` from the rest of the line."""
    head = cur.next("matrix dimensions RxC")
    m = DIMS.match(head.text)
    if not m:
        raise ParseError(head.line, head.col, f"expected matrix dimensions like 2x3, got {head.text!r}")
    nr, nc = int(m.group(1)), int(m.group(2))
    toks = cur.rest()
    if not toks:
        raise ParseError(head.line, head.col + len(head.text), "missing matrix body")
    # re-tokenise so that brackets, ';' and ',' ':' stand alone
    pieces = []
    for t in toks:
        for sub in re.finditer(r"[\[\]{};]|[^\s\[\]{};]+", t.text):
            pieces.append(Tok(sub.group(), t.line, t.col + sub.start()))
    opener = pieces[0]
    if opener.text not in "[{" or pieces[-1].text != {"[": "]", "{": "}"}[opener.text]:
        raise ParseError(opener.line, opener.col, "matrix body must be enclosed in [...] or {...}")
    inner = pieces[1:-1]
    if opener.text == "[":
        rows, cur_row = [], []
        for p in inner:
            if p.text == ";":
                rows.append(cur_row)
                cur_row = []
            elif p.text in "[]{}":
                raise ParseError(p.line, p.col, f"unexpected {p.text!r} in matrix")
            else:
                cur_row.append(p)
        if cur_row or rows:
            rows.append(cur_row)
        if nr == 0 or nc == 0:
            rows = [r for r in rows if r]
        if len(rows) != nr or any(len(r) != nc for r in rows):
            shape = f"{len(rows)}x{max((len(r) for r in rows), default=0)}"
            raise ParseError(head.line, head.col, f"matrix declared {nr}x{nc} but body is {shape}", "semantic")
        return tuple(tuple(_scalar(f, p.text, p.line, p.col) for p in r) for r in rows)
    dense = [[f.zero] * nc for _ in range(nr)]
    for p in inner:
        em = re.fullmatch(r"(\d+),(\d+):(.+)", p.text)
        if not em:
            raise ParseError(p.line, p.col, f"sparse entry must look like i,j:v, got {p.text!r}")
        i, j = int(em.group(1)), int(em.group(2))
        if i >= nr or j >= nc:
            raise ParseError(p.line, p.col, f"entry ({i},{j}) outside declared {nr}x{nc}", "semantic")
        dense[i][j] = _scalar(f, em.group(3), p.line, p.col + em.start(3))
    return tuple(tuple(r) for r in dense)


# ---------------------------------------------------------------------------
# parsing


def _parse_field(t: Tok) -> Field:
    if t.text == "q":
        return QQ
    m = re.fullmatch(r"fp:(\d+)", t.text)
    if not m:
        raise ParseError(t.line, t.col, f"field must be q or fp:<prime>, got {t.text!r}")
    try:
        return Field(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(t.line, t.col, str(exc), "semantic") from None


def parse_decls(text: str) -> tuple[Field, list[Decl]]:
    """Syntax pass only: no objects are built."""
    f = QQ
    decls: list[Decl] = []
    seen_field = False
    block: Decl | None = None
    body: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw, lineno)
        if not toks:
            continue
        cur = _Cursor(toks, lineno, len(raw.rstrip()))
        kw = cur.next("keyword")
        if block is not None:
            if kw.text == "end":
                cur.done()
                block.body = tuple(body)
                decls.append(block)
                block, body = None, []
                continue
            body.append(_body_item(f, block, kw, cur))
            cur.done()
            continue
        if kw.text == "field":
            if seen_field or decls:
                raise ParseError(kw.line, kw.col, "field must be declared once, before anything else")
            f = _parse_field(cur.next("field name"))
            cur.done()
            seen_field = True
        elif kw.text in ("algebra", "extension", "bimodule"):
            name = _name(cur.next("name"))
            if kw.text == "algebra":
                args = (_int(cur.next("dimension")),)
            elif kw.text == "extension":
                args = (_name(cur.next("base algebra")), _name(cur.next("total algebra")))
            else:
                args = (
                    _name(cur.next("left algebra")),
                    _name(cur.next("right algebra")),
                    _int(cur.next("dimension")),
                )
            cur.done()
            block = Decl(kw.text, name, args, line=kw.line, col=kw.col)
        elif kw.text == "coring":
            name = _name(cur.next("name"))
            how = cur.next("sweedler, trivial, dirsum or explicit")
            if how.text in ("sweedler", "trivial"):
                args = (how.text, _name(cur.next("name")))
                cur.done()
                decls.append(Decl("coring", name, args, line=kw.line, col=kw.col))
            elif how.text == "dirsum":
                parts = tuple(_name(t) for t in cur.rest())
                if not parts:
                    raise ParseError(how.line, how.col, "dirsum needs at least one summand")
                decls.append(Decl("coring", name, ("dirsum",) + parts, line=kw.line, col=kw.col))
            elif how.text == "explicit":
                args = ("explicit", _name(cur.next("carrier bimodule")))
                cur.done()
                block = Decl("coring", name, args, line=kw.line, col=kw.col)
            else:
                raise ParseError(how.line, how.col, f"unknown coring form {how.text!r}")
        elif kw.text == "element":
            name = _name(cur.next("name"))
            owner = _name(cur.next("owner"))
            colon = cur.next("':'")
            if colon.text != ":":
                raise ParseError(colon.line, colon.col, "expected ':' before the coordinates")
            vec = _vector(f, cur.rest())
            decls.append(Decl("element", name, (owner,), (("coords", vec),), line=kw.line, col=kw.col))
        else:
            raise ParseError(kw.line, kw.col, f"unknown declaration {kw.text!r}")
    if block is not None:
        raise ParseError(block.line, block.col, f"{block.kind} {block.name} is missing 'end'")
    names: dict = {}
    for d in decls:
        if d.name in names:
            raise ParseError(d.line, d.col, f"{d.name} declared twice (first at line {names[d.name]})", "semantic")
        names[d.name] = d.line
    return f, decls


def _body_item(f: Field, block: Decl, kw: Tok, cur: _Cursor) -> tuple:
    allowed = {
        "algebra": ("labels", "unit", "mul"),
        "extension": ("embed", "expectation"),
        "bimodule": ("labels", "left", "right"),
        "coring": ("coproduct", "counit"),
    }[block.kind]
    if kw.text not in allowed:
        raise ParseError(kw.line, kw.col, f"{kw.text!r} is not allowed in a {block.kind} block")
    if kw.text == "labels":
        return ("labels", tuple(_name(t) for t in cur.rest()))
    if kw.text == "unit":
        return ("unit", _vector(f, cur.rest()))
    if kw.text == "mul":
        i, j = cur.next("left factor"), cur.next("right factor")
        colon = cur.next("':'")
        if colon.text != ":":
            raise ParseError(colon.line, colon.col, "expected ':' before the product coordinates")
        return ("mul", i.text, j.text, _vector(f, cur.rest()), kw.line, i.col)
    if kw.text in ("left", "right"):
        idx = cur.next("basis element")
        return (kw.text, idx.text, _matrix(f, cur), kw.line, idx.col)
    return (kw.text, _matrix(f, cur), kw.line, kw.col)


def _strip(d: Decl) -> Decl:
    """Drop source positions from body items so decls compare structurally."""
    out = []
    for item in d.body:
        if item[0] == "mul":
            out.append(item[:4])
        elif item[0] in ("left", "right"):
            out.append(item[:3])
        elif item[0] in ("embed", "expectation", "coproduct", "counit"):
            out.append(item[:2])
        else:
            out.append(item)
    return Decl(d.kind, d.name, d.args, tuple(out), d.line, d.col)


def parse_presentation(text: str) -> Presentation:
    """Parse and build every declared object; raises :class:`ParseError`."""
    f, decls = parse_decls(text)
    pres = Presentation(f, [_strip(d) for d in decls])
    for d in decls:
        pres.objects[d.name] = _build(f, d, pres)
    return pres


# ---------------------------------------------------------------------------
# building


def _sem(d: Decl, msg: str, line: int | None = None, col: int | None = None) -> ParseError:
    return ParseError(line or d.line, col or d.col, msg, "semantic")


def _lookup(pres: Presentation, d: Decl, name: str, kind):
    obj = pres.objects.get(name)
    if obj is None:
        raise _sem(d, f"{name} is not declared before {d.name}")
    if not isinstance(obj, kind):
        raise _sem(d, f"{name} is not a{'n' if kind.__name__[0] in 'AE' else ''} {kind.__name__}")
    return obj


def _mat(f: Field, rows: tuple) -> Mat:
    ncols = len(rows[0]) if rows else 0
    return Mat(f, len(rows), ncols, [{j: x for j, x in enumerate(r) if x} for r in rows])


def _shape(rows: tuple) -> tuple[int, int]:
    return (len(rows), len(rows[0]) if rows else 0)


def _index(labels: tuple, text: str, dim: int, d: Decl, line: int, col: int) -> int:
    if text in labels:
        return labels.index(text)
    if text.isdigit() and int(text) < dim:
        return int(text)
    raise _sem(d, f"{text!r} is not a basis element", line, col)


def _build(f: Field, d: Decl, pres: Presentation):
    items = {}
    for it in d.body:
        if it[0] in ("labels", "unit", "embed", "expectation", "coproduct", "counit") and it[0] in items:
            raise _sem(d, f"{it[0]} given twice in {d.name}")
        items.setdefault(it[0], it)
    if d.kind == "algebra":
        return _build_algebra(f, d, items)
    if d.kind == "extension":
        base = _lookup(pres, d, d.args[0], Algebra)
        total = _lookup(pres, d, d.args[1], Algebra)
        if "embed" not in items:
            raise _sem(d, f"extension {d.name} needs an embed line")
        emb = items["embed"]
        if _shape(emb[1]) != (total.dim, base.dim):
            raise _sem(d, f"embed must be {total.dim}x{base.dim}", emb[2], emb[3])
        exp = None
        if "expectation" in items:
            e = items["expectation"]
            if _shape(e[1]) != (base.dim, total.dim):
                raise _sem(d, f"expectation must be {base.dim}x{total.dim}", e[2], e[3])
            exp = _mat(f, e[1])
        ext = RingExtension(base, total, _mat(f, emb[1]), exp, name=d.name)
        bad = [c for c in check_extension(ext) if not c]
        if bad:
            raise _sem(d, f"extension {d.name}: {bad[0].name} fails")
        return ext
    if d.kind == "bimodule":
        return _build_bimodule(f, d, pres)
    if d.kind == "coring":
        return _build_coring(f, d, pres, items)
    if d.kind == "element":
        return _build_element(f, d, pres)
    raise _sem(d, f"unknown declaration kind {d.kind}")


def _build_algebra(f: Field, d: Decl, items: dict) -> Algebra:
    n = d.args[0]
    labels = items["labels"][1] if "labels" in items else ()
    if labels and len(labels) != n:
        raise _sem(d, f"algebra {d.name} has dimension {n} but {len(labels)} labels")
    if "unit" not in items:
        raise _sem(d, f"algebra {d.name} needs a unit line")
    unit = items["unit"][1]
    if len(unit) != n:
        raise _sem(d, f"unit has {len(unit)} coordinates, expected {n}")
    prods = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for it in d.body:
        if it[0] != "mul":
            continue
        _, ti, tj, vec, line, col = it
        i = _index(labels, ti, n, d, line, col)
        j = _index(labels, tj, n, d, line, col)
        if (i, j) in seen:
            raise _sem(d, f"product {ti} {tj} given twice", line, col)
        seen.add((i, j))
        if len(vec) != n:
            raise _sem(d, f"product has {len(vec)} coordinates, expected {n}", line, col)
        prods[i][j] = list(vec)
    alg = Algebra(f, n, prods, unit, labels=labels or None, name=d.name)
    chk = check_algebra(alg)
    if not chk:
        raise _sem(d, f"algebra {d.name}: {chk.name} fails ({chk.detail})")
    return alg


def _build_bimodule(f: Field, d: Decl, pres: Presentation) -> Bimodule:
    la, ra = (
        Algebra.ground(f) if x == "k" and x not in pres.objects else _lookup(pres, d, x, Algebra) for x in d.args[:2]
    )
    n = d.args[2]
    labels = ()
    acts = {"left": [None] * la.dim, "right": [None] * ra.dim}
    for it in d.body:
        if it[0] == "labels":
            labels = it[1]
            continue
        side, idx, rows, line, col = it
        alg = la if side == "left" else ra
        i = _index(alg.labels, idx, alg.dim, d, line, col)
        if _shape(rows) != (n, n):
            raise _sem(d, f"action matrix must be {n}x{n}", line, col)
        if acts[side][i] is not None:
            raise _sem(d, f"{side} action of {idx} given twice", line, col)
        acts[side][i] = _mat(f, rows)
    for side, alg in (("left", la), ("right", ra)):
        missing = [alg.labels[i] for i, m in enumerate(acts[side]) if m is None]
        if missing:
            raise _sem(d, f"bimodule {d.name} lacks the {side} action of {missing[0]}")
    if labels and len(labels) != n:
        raise _sem(d, f"bimodule {d.name} has dimension {n} but {len(labels)} labels")
    m = Bimodule(la, ra, n, acts["left"], acts["right"], name=d.name, labels=labels or None)
    chk = check_bimodule(m)
    if not chk:
        raise _sem(d, f"bimodule {d.name}: {chk.name} fails ({chk.detail})")
    return m


def _build_coring(f: Field, d: Decl, pres: Presentation, items: dict) -> Coring:
    how = d.args[0]
    if how == "sweedler":
        c = sweedler_coring(_lookup(pres, d, d.args[1], RingExtension), name=d.name)
    elif how == "trivial":
        c = trivial_coring(_lookup(pres, d, d.args[1], Algebra), name=d.name)
    elif how == "dirsum":
        parts = [_lookup(pres, d, p, Coring) for p in d.args[1:]]
        if any(p.alg is not parts[0].alg for p in parts):
            raise _sem(d, "dirsum summands must be corings over the same algebra")
        c = direct_sum_coring(parts, name=d.name)
    else:
        carrier = _lookup(pres, d, d.args[1], Bimodule)
        if carrier.left_alg is not carrier.right_alg:
            raise _sem(d, f"carrier {carrier.name} is not an (A, A)-bimodule")
        n = carrier.dim
        if "coproduct" not in items:
            raise _sem(d, f"coring {d.name} needs a coproduct line")
        cp = items["coproduct"]
        if _shape(cp[1]) != (n * n, n):
            raise _sem(d, f"coproduct must be {n * n}x{n} (rows are simple tensors)", cp[2], cp[3])
        counit = None
        if "counit" in items:
            cu = items["counit"]
            if _shape(cu[1]) != (carrier.left_alg.dim, n):
                raise _sem(d, f"counit must be {carrier.left_alg.dim}x{n}", cu[2], cu[3])
            counit = _mat(f, cu[1])
        from .findim import tensor

        cc = tensor(carrier, carrier)
        c = Coring(carrier, cc.proj @ _mat(f, cp[1]), counit, name=d.name)
    bad = [chk for chk in check_coring(c) if chk.status == FAIL]
    if bad:
        raise _sem(d, f"coring {d.name}: {bad[0].name} fails ({bad[0].detail})")
    return c


def _build_element(f: Field, d: Decl, pres: Presentation) -> list:
    owner = pres.objects.get(d.args[0])
    if owner is None:
        raise _sem(d, f"{d.args[0]} is not declared before {d.name}")
    vec = list(d.body[0][1])
    if isinstance(owner, Coring):
        owner = owner.carrier
    if isinstance(owner, Algebra):
        if len(vec) != owner.dim:
            raise _sem(d, f"element has {len(vec)} coordinates, expected {owner.dim}")
        return vec
    if isinstance(owner, TensorProduct):
        if len(vec) != owner.quot.ambient:
            raise _sem(d, f"element has {len(vec)} coordinates, expected {owner.quot.ambient} (simple tensors)")
        return owner.proj.apply(vec)
    if isinstance(owner, Bimodule):
        if len(vec) != owner.dim:
            raise _sem(d, f"element has {len(vec)} coordinates, expected {owner.dim}")
        return vec
    raise _sem(d, f"{d.args[0]} cannot own elements")


# ---------------------------------------------------------------------------
# printing


def _fmt_vec(f: Field, v) -> str:
    return " ".join(f.format(x) for x in v)


def _fmt_mat(f: Field, rows: tuple) -> str:
    nr, nc = _shape(rows)
    nnz = sum(1 for r in rows for x in r if x)
    head = f"{nr}x{nc}"
    if nr * nc and 2 * nnz < nr * nc:
        ents = " ".join(f"{i},{j}:{f.format(x)}" for i, r in enumerate(rows) for j, x in enumerate(r) if x)
        return f"{head} {{{ents}}}"
    return f"{head} [" + "; ".join(_fmt_vec(f, r) for r in rows) + "]"


def print_presentation(p: Presentation) -> str:
    f = p.field
    out = [f"field {f.name}"]
    for d in p.decls:
        if d.kind == "coring" and d.args[0] != "explicit":
            out.append(f"coring {d.name} " + " ".join(d.args))
            continue
        if d.kind == "element":
            out.append(f"element {d.name} {d.args[0]} : {_fmt_vec(f, d.body[0][1])}")
            continue
        out.append(f"{d.kind} {d.name} " + " ".join(str(a) for a in d.args))
        for it in d.body:
            key = it[0]
            if key == "labels":
                out.append("  labels " + " ".join(it[1]))
            elif key == "unit":
                out.append("  unit " + _fmt_vec(f, it[1]))
            elif key == "mul":
                out.append(f"  mul {it[1]} {it[2]} : {_fmt_vec(f, it[3])}")
            elif key in ("left", "right"):
                out.append(f"  {key} {it[1]} {_fmt_mat(f, it[2])}")
            else:
                out.append(f"  {key} {_fmt_mat(f, it[1])}")
        out.append("end")
    return "\n".join(out) + "\n"


def _rows(m: Mat) -> tuple:
    return tuple(tuple(r) for r in m.to_dense())


def _safe_labels(labels, n):
    if labels and len(set(labels)) == n and all(NAME.match(x) for x in labels):
        return tuple(labels)
    return None


def algebra_decl(a: Algebra, name: str | None = None) -> Decl:
    labels = _safe_labels(a.labels, a.dim)
    body = []
    if labels:
        body.append(("labels", labels))
    body.append(("unit", tuple(a.unit)))
    lab = labels or tuple(str(i) for i in range(a.dim))
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.products[i][j]
            if any(v):
                body.append(("mul", lab[i], lab[j], tuple(v)))
    return Decl("algebra", name or a.name, (a.dim,), tuple(body))


def coring_presentation(c: Coring, alg_name: str = "A", carrier_name: str = "M", name: str = "C") -> Presentation:
    """An explicit, self-contained presentation of ``c`` (used for dumps)."""
    a = c.alg
    f = c.field
    ad = algebra_decl(a, alg_name)
    lab = next((it[1] for it in ad.body if it[0] == "labels"), None) or tuple(str(i) for i in range(a.dim))
    m = c.carrier
    body = []
    labels = _safe_labels(m.labels, m.dim) if m.labels else None
    if labels:
        body.append(("labels", labels))
    body += [("left", lab[i], _rows(x)) for i, x in enumerate(m.left)]
    body += [("right", lab[i], _rows(x)) for i, x in enumerate(m.right)]
    md = Decl("bimodule", carrier_name, (alg_name, alg_name, m.dim), tuple(body))
    cbody = [("coproduct", _rows(c.cc.sect @ c.coproduct))]
    if c.counit is not None:
        cbody.append(("counit", _rows(c.counit)))
    cd = Decl("coring", name, ("explicit", carrier_name), tuple(cbody))
    return Presentation(f, [ad, md, cd])


def check_presentation(p: Presentation) -> list:
    """Re-run the axiom checks of every built object."""
    out = []
    for d in p.decls:
        obj = p.objects[d.name]
        if isinstance(obj, Algebra):
            out.append(check_algebra(obj))
        elif isinstance(obj, RingExtension):
            out.extend(check_extension(obj))
        elif isinstance(obj, Coring):
            out.extend(check_coring(obj))
        elif isinstance(obj, Bimodule):
            out.append(check_bimodule(obj))
    return out


__all__ = [
    "Decl",
    "ParseError",
    "Presentation",
    "algebra_decl",
    "check_presentation",
    "coring_presentation",
    "parse_decls",
    "parse_presentation",
    "print_presentation",
]
