"""Acceptance suite: ten criteria, each reported on one PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import functools
import sys

from coringlab.analysis import firm_module_checks, morita_sections
from coringlab.arings import coring_from_separable_aring, e_multiplication, product_from_cointegral
from coringlab.checks import FAIL, PASS
from coringlab.corings import (
    Coring,
    check_cointegral,
    check_coring,
    expectation_cointegral,
    is_cosplit,
    regular_comodule,
    solve_cointegral,
    sweedler_coring,
)
from coringlab.duality import (
    is_biseparable_coring,
    is_centrally_projective,
    is_coring_frobenius,
    is_separable_ext,
    is_split_ext,
    transfer_checks,
)
from coringlab.exact import Field
from coringlab.findim import is_fgp, replay_dual_basis
from coringlab.hunt import HuntConfig, hunt_conjecture
from coringlab.morita import MoritaContext, is_strict
from coringlab.zoo import fixture, zoo

RESULTS: dict[int, tuple[str, str]] = {}
SEEDS = (1, 2, 3)


def criterion(number: int, title: str):
    """Record the outcome of one criterion, then let pytest see the failure."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                note = fn(*args, **kwargs)
            except AssertionError as exc:
                RESULTS[number] = ("FAIL", f"{title}: {exc}")
                raise
            RESULTS[number] = ("PASS", title + (f" ({note})" if note else ""))

        return run

    return wrap


def report_lines() -> list[str]:
    return [f"criterion {n:2d} {RESULTS[n][0]}  {RESULTS[n][1]}" for n in sorted(RESULTS)]


def coseparable_fixtures():
    return [fx for fx in zoo().values() if fx.golden.get("coseparable")]


@criterion(1, "induced product associative, coproduct bilinear, product formulas agree")
def test_c01_induced_product():
    count = 0
    for fx in coseparable_fixtures():
        for seed in SEEDS:
            gi = solve_cointegral(fx.coring, seed=seed)
            assert gi is not None, f"{fx.name}: no cointegral"
            ir = product_from_cointegral(fx.coring, gi.gamma)
            bad = [c.name for c in ir.checks if not c]
            assert not bad, f"{fx.name} seed {seed}: {bad}"
            names = {c.name for c in ir.checks}
            assert {"alternative products agree", "associativity", "right C-linearity of coproduct", "left C-linearity of coproduct"} <= names
            count += 1
    return f"{count} fixture/seed pairs"


@criterion(2, "lambda-sequence exact and comparison bijective for C and A on TRIV, DIAG2")
def test_c02_firm_modules():
    for name in ("TRIV", "DIAG2"):
        fx = fixture(name)
        checks = firm_module_checks(fx.coring, fx.grouplike)
        names = [c.name for c in checks]
        for m in ("C", "A"):
            assert f"{m}: lambda sequence exact" in names and f"{m}: firm" in names
        bad = [c.name for c in checks if not c]
        assert not bad, f"{name}: {bad}"


@criterion(3, "e_multiplication(DIAG2) equals product_from_cointegral with gamma_E")
def test_c03_e_multiplication():
    ext = fixture("DIAG2").extension
    c = sweedler_coring(ext)
    gamma_e = expectation_cointegral(c, ext)
    assert all(check_cointegral(c, gamma_e)), "gamma_E is not a cointegral"
    assert e_multiplication(ext).product == product_from_cointegral(c, gamma_e).ring.product


@criterion(4, "separable A-ring round trip reproduces the coproduct, coassociative")
def test_c04_round_trip():
    for fx in coseparable_fixtures():
        c = fx.coring
        ir = product_from_cointegral(c, solve_cointegral(c).gamma)
        back, checks = coring_from_separable_aring(ir.ring, c.coproduct)
        assert back.coproduct == c.coproduct, fx.name
        coassoc = next(x for x in checks if x.name == "coassociativity")
        assert coassoc, fx.name
        assert not [x.name for x in checks if x.status == FAIL], fx.name


REQUIRED_CONTEXT = (
    "B closed under product",
    "unit in B",
    "Q left ideal",
    "g in Q",
    "Q: firm",
    "square sigma-tau on Q",
    "square tau-sigma on A",
    "tau bijective",
)


@criterion(5, "Morita context end to end on TRIV, DIAG2, GAUSS, C2GROUP; DIAG2 gives B=2, Q=4, strict")
def test_c05_morita():
    for name in ("TRIV", "DIAG2", "GAUSS", "C2GROUP"):
        fx = fixture(name)
        sections = morita_sections(fx.coring, fx.grouplike)
        by = {s.name: s for s in sections}
        ctx_names = {c.name: c for c in by["context"].checks}
        for req in REQUIRED_CONTEXT:
            assert ctx_names[req], f"{name}: {req}"
        for which in ("A", "C"):
            ot = by[f"omega/theta {which}"].checks
            assert ot and all(ot), f"{name}: omega/theta {which}"
        bad = [(s.name, c.name) for s in sections for c in s.checks if c.status != PASS]
        assert not bad, f"{name}: {bad}"
        if name == "DIAG2":
            data = by["context"].data
            assert (data["B_dim"], data["Q_dim"], data["strict"]) == (2, 4, True), data


@criterion(6, "left-unit grouplike forces a strict context, exhaustive over the zoo")
def test_c06_left_unit_strict():
    seen = 0
    for fx in zoo().values():
        g = fx.grouplike
        gi = solve_cointegral(fx.coring)
        if g is None or gi is None:
            continue
        st = is_strict(MoritaContext(fx.coring, gi.gamma, g))
        if st.g_left_unit:
            seen += 1
            assert st.strict, fx.name
    assert seen, "no fixture has a left-unit grouplike"
    return f"{seen} left-unit fixtures"


@criterion(7, "transfer suite: retractions, coseparable iff separable, route agreement, central projectivity")
def test_c07_transfer():
    for fx in zoo().values():
        c = fx.coring
        checks = transfer_checks(c, [regular_comodule(c)])
        bad = [x.name for x in checks if x.status == FAIL]
        assert not bad, f"{fx.name}: {bad}"
        names = {x.name: x for x in checks}
        cs = is_cosplit(c)
        if cs is not None:
            assert names["E* retracts iota*"] and names["*E retracts *iota"], fx.name
        for side, name in (("right", "iota*"), ("left", "*iota")):
            if is_fgp(c.carrier, side) is not None:
                assert names[f"coseparable iff {name} separable"], fx.name
        fro = is_coring_frobenius(c, cross_check=True)
        if fro.status != "inapplicable":
            assert fro.agree, f"{fx.name}: routes disagree"
        cp = is_centrally_projective(c)
        if cp is not None and cs is not None and solve_cointegral(c) is not None:
            assert fro.frobenius, f"{fx.name}: centrally projective but not Frobenius"


@criterion(8, "split + separable + fgp extensions give biseparable Sweedler corings")
def test_c08_biseparable():
    covered = []
    for fx in zoo().values():
        ext = fx.extension
        if ext is None:
            continue
        if is_split_ext(ext) is None or is_separable_ext(ext) is None:
            continue
        if is_fgp(ext.module("k", "B"), "right") is None:
            continue
        c = sweedler_coring(ext)
        b = is_biseparable_coring(c)
        assert b.biseparable, fx.name
        assert replay_dual_basis(c.carrier, b.fgp_left) and replay_dual_basis(c.carrier, b.fgp_right), fx.name
        assert all(b.cosplit.checks), fx.name
        assert all(b.cointegral.checks), fx.name
        covered.append(fx.name)
    assert covered
    return ", ".join(covered)


@criterion(9, "hunt seed 7, budget 100, caps (4, 8) over F_10007: identical logs, golden-consistent")
def test_c09_hunt():
    cfg = dict(seed=7, budget=100, max_dim_a=4, max_dim_c=8, field=Field(10007))
    first = hunt_conjecture(HuntConfig(**cfg))
    second = hunt_conjecture(HuntConfig(**cfg))
    assert first.log == second.log, "logs differ"
    zoo_trials = [t for t in first.trials if t.family == "zoo" and not t.skipped]
    assert zoo_trials, "no zoo-derived trials"
    bad = [t.index for t in zoo_trials if not t.consistent]
    assert not bad, f"inconsistent zoo trials {bad}"
    assert first.stats["golden_mismatch"] == 0
    hits = ", ".join(f"{h['trial']:04d} {h['audit']}" for h in first.counterexamples) or "none"
    return f"{len(zoo_trials)} zoo trials; counterexamples: {hits}"


@criterion(10, "NONSPLIT negative controls; doubled counit on DIAG2 is localised")
def test_c10_negative_controls():
    c = fixture("NONSPLIT").coring
    assert solve_cointegral(c) is None, "NONSPLIT has a cointegral"
    assert is_cosplit(c) is None, "NONSPLIT is cosplit"
    assert not is_biseparable_coring(c).biseparable
    d = fixture("DIAG2").coring
    bad = Coring(d.carrier, d.coproduct, d.counit.scale(2))
    failed = [x for x in check_coring(bad) if x.status == FAIL]
    assert failed, "perturbed counit passed"
    assert all("at" in x.detail for x in failed), [x.detail for x in failed]
    return f"first violation: {failed[0].name} at {failed[0].detail['at']}"


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    print("\n".join(report_lines()))
    sys.exit(0 if all(s == "PASS" for s, _ in RESULTS.values()) and len(RESULTS) == 10 else 1)
