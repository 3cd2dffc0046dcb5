"""Command line: ``coringlab {check,analyze,morita,dual,hunt,zoo}``.

Exit codes: 0 all checks pass, 1 a check fails (or the file declares an
object violating its axioms), 2 usage error (bad arguments, unreadable or
syntactically malformed file).
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from .analysis import Section, coring_sections, extension_sections, morita_sections
from .checks import FAIL, INFEASIBLE, PASS, Check
from .corings import Coring
from .duality import check_dual_ring, dual_ring, is_frobenius_ext, is_separable_ext, is_split_ext
from .exact import DEFAULT_PRIME, QQ, Field
from .extension import RingExtension
from .findim import TensorProduct
from .hunt import HuntConfig, hunt_conjecture
from .presentation import ParseError, Presentation, check_presentation, parse_presentation, print_presentation
from .report import build_report, to_json, to_text
from .zoo import fixture, zoo

log = logging.getLogger("coringlab")


class UsageError(Exception):
    pass


def parse_field(text: str) -> Field:
    if text == "q":
        return QQ
    m = re.fullmatch(r"fp:(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"field must be q or fp:<prime>, got {text!r}")
    try:
        return Field(int(m.group(1)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load(path: str, field: Field | None = None) -> Presentation:
    """Read a presentation file, or a zoo fixture given as ``zoo:NAME``."""
    if path.startswith("zoo:"):
        try:
            text = fixture(path[4:]).text
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if field is not None:
        if re.search(r"^\s*field\s", text, re.M):
            text = re.sub(r"^(\s*)field\s+\S+", rf"\1field {field.name}", text, count=1, flags=re.M)
        else:
            text = f"field {field.name}\n" + text
    return parse_presentation(text)


def _coring(p: Presentation, name: str | None) -> tuple[str, Coring]:
    names = [n for n in p.names("coring")]
    if not names:
        raise UsageError("the file declares no coring")
    if name is None:
        name = "C" if "C" in names else names[-1]
    if name not in names:
        raise UsageError(f"no coring named {name!r}; declared: {', '.join(names)}")
    return name, p[name]


def _extension_of(p: Presentation, cname: str) -> RingExtension | None:
    d = p.decl(cname)
    if d.args[0] == "sweedler":
        return p[d.args[1]]
    return None


def resolve_grouplike(p: Presentation, c: Coring, text: str | None) -> list:
    """An element name, ``x⊗y`` of algebra labels (Sweedler carriers), or a carrier label."""
    if text is None:
        text = "g"
    if text in p.objects and p.decl(text).kind == "element":
        return p[text]
    a = c.alg

    def alg_vec(tok: str) -> list:
        if tok in a.labels:
            return a.basis_vector(a.labels.index(tok))
        if tok in ("1", "one"):
            return list(a.unit)
        raise UsageError(f"{tok!r} is neither a basis label of {a.name} nor 1")

    parts = re.split(r"⊗|\*|@", text)
    if len(parts) == 2:
        car = c.carrier
        if not isinstance(car, TensorProduct):
            raise UsageError("x⊗y grouplikes need a Sweedler coring")
        return car.simple(alg_vec(parts[0].strip()), alg_vec(parts[1].strip()))
    labels = [c.carrier.label(i) for i in range(c.dim)]
    if text in labels:
        return c.carrier.basis_vector(labels.index(text))
    raise UsageError(f"cannot interpret grouplike {text!r}")


def _emit(rep: dict, args) -> int:
    print(to_json(rep) if args.json else to_text(rep))
    return 1 if rep["status"] == FAIL else 0


def cmd_check(args) -> int:
    p = load(args.file, args.field)
    checks = check_presentation(p)
    rep = build_report("check", args.file, [Section("declarations", checks)], {"objects": len(p.decls)}, args.trace)
    return _emit(rep, args)


def cmd_analyze(args) -> int:
    p = load(args.file, args.field)
    name, c = _coring(p, args.coring)
    sections = coring_sections(c, seed=args.seed)
    ext = _extension_of(p, name)
    if ext is not None:
        sections += extension_sections(ext, seed=args.seed)
    return _emit(build_report("analyze", f"{args.file}:{name}", sections, trace=args.trace), args)


def cmd_morita(args) -> int:
    p = load(args.file, args.field)
    name, c = _coring(p, args.coring)
    g = resolve_grouplike(p, c, args.grouplike)
    sections = morita_sections(c, g, seed=args.seed)
    summary = {}
    for s in sections:
        if s.name == "context":
            summary, s.data = s.data, {}
    return _emit(build_report("morita", f"{args.file}:{name}", sections, summary, args.trace), args)


def cmd_dual(args) -> int:
    p = load(args.file, args.field)
    name, c = _coring(p, args.coring)
    if c.counit is None:
        raise UsageError("duals need a counital coring")
    d = dual_ring(c, args.side)
    sec = Section(f"{args.side} dual", check_dual_ring(d), {"dim": d.algebra.dim})
    props = Section("iota extension")
    props.checks.append(Check("split", PASS if is_split_ext(d.ext) is not None else INFEASIBLE))
    props.checks.append(Check("separable", PASS if is_separable_ext(d.ext) is not None else INFEASIBLE))
    fr = is_frobenius_ext(d.ext, seed=args.seed)
    props.checks.append(Check("frobenius", PASS if fr.frobenius else INFEASIBLE, {"reason": fr.reason} if fr.reason else {}))
    rep = build_report("dual", f"{args.file}:{name}", [sec, props], trace=args.trace)
    return _emit(rep, args)


def cmd_hunt(args) -> int:
    cfg = HuntConfig(
        seed=args.seed,
        budget=args.budget,
        max_dim_a=args.max_dim_a,
        max_dim_c=args.max_dim_c,
        field=args.field or Field(DEFAULT_PRIME),
        out=Path(args.out) if args.out else None,
    )
    res = hunt_conjecture(cfg)
    text = "\n".join(res.log)
    if text:
        print(text)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / f"hunt_{args.seed}.log").write_text(text + ("\n" if text else ""))
    return 0


def cmd_zoo(args) -> int:
    fixtures = zoo()
    if args.name is None:
        for n, fx in fixtures.items():
            c = fx.coring
            print(f"{n:<9} dimA={c.alg.dim} dimC={c.dim}")
        return 0
    if args.name not in fixtures:
        raise UsageError(f"no fixture {args.name!r}; known: {', '.join(fixtures)}")
    fx = fixtures[args.name]
    text = print_presentation(fx.presentation)
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{args.name}.pres").write_text(text)
    print(text, end="")
    if args.golden:
        for k, v in fx.golden.items():
            print(f"# {k} = {v}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coringlab", description="Exact checks for corings, A-rings and their duals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=parse_field, default=None, help="q or fp:<p>; overrides the file's field line")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trace", action="store_true", help="print failing identities in Sweedler notation")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="parse a presentation and re-check every object")
    p.add_argument("file", help="presentation file, or zoo:NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", parents=[common], help="full coring battery")
    p.add_argument("file")
    p.add_argument("--coring", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("morita", parents=[common], help="Morita context from a cointegral and a grouplike")
    p.add_argument("file")
    p.add_argument("--coring", default=None)
    p.add_argument("--grouplike", "-g", default=None, help="element name or x⊗y (default: the element g)")
    p.set_defaults(func=cmd_morita)

    p = sub.add_parser("dual", parents=[common], help="left or right dual ring and its extension")
    p.add_argument("file")
    p.add_argument("--coring", default=None)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("hunt", parents=[common], help="random search for biseparable non-Frobenius corings")
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--max-dim-a", type=int, default=4)
    p.add_argument("--max-dim-c", type=int, default=8)
    p.add_argument("--out", default=None, help="directory for the log and counterexample dumps")
    p.set_defaults(func=cmd_hunt, seed=7)

    p = sub.add_parser("zoo", parents=[common], help="list fixtures or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--write", default=None, help="also write NAME.pres into this directory")
    p.add_argument("--golden", action="store_true", help="append the golden property vector")
    p.set_defaults(func=cmd_zoo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{getattr(args, 'file', '?')}:{exc}", file=sys.stderr)
        return 1 if exc.kind == "semantic" else 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
