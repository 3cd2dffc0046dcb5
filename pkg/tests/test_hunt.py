from coringlab.corings import check_coring
from coringlab.exact import QQ
from coringlab.hunt import (
    ARTIFACT,
    HuntConfig,
    _Context,
    algebra_pool,
    audit_over_q,
    classify,
    generated_subalgebra,
    hunt_conjecture,
    lift_presentation,
    run_trial,
)
from coringlab.presentation import coring_presentation, parse_presentation, print_presentation
from coringlab.zoo import TEXTS, fixture


def test_budget_zero_is_silent():
    res = hunt_conjecture(HuntConfig(budget=0))
    assert res.log == [] and res.trials == [] and res.counterexamples == []


def test_small_budget_is_deterministic():
    a = hunt_conjecture(HuntConfig(seed=7, budget=10)).log
    b = hunt_conjecture(HuntConfig(seed=7, budget=10)).log
    assert a == b
    assert len(a) == 11 and a[-1].startswith("stats trials=10 ")


def test_seeds_differ():
    a = hunt_conjecture(HuntConfig(seed=7, budget=6)).log
    b = hunt_conjecture(HuntConfig(seed=8, budget=6)).log
    assert a != b


def test_dimension_caps_skip():
    res = hunt_conjecture(HuntConfig(seed=7, budget=10, max_dim_a=1, max_dim_c=1))
    assert all(t.skipped or (t.dim_a <= 1 and t.dim_c <= 1) for t in res.trials)
    assert res.stats["skipped"] > 0


def test_generated_subalgebra():
    m2 = algebra_pool(QQ)["M2"]
    sub, inc = generated_subalgebra(m2, [m2.basis_vector(0)])
    assert sub.dim == 2 and inc.shape == (4, 2)
    sub, _ = generated_subalgebra(m2, [m2.basis_vector(1), m2.basis_vector(2)])
    assert sub.dim == 4


def test_trial_71_counterexample():
    """Seed 7 trial 71: biseparable, not Frobenius, both dual routes agree."""
    ctx = _Context(HuntConfig(seed=7, budget=100))
    t, c = run_trial(ctx, 71)
    assert t.family == "dirsum"
    assert t.verdict["biseparable"] and t.verdict["frobenius"] == "fail"
    assert t.verdict["routes_agree"] is True
    pres = coring_presentation(c)
    assert audit_over_q(pres) == "confirmed over Q"
    lifted = parse_presentation(print_presentation(lift_presentation(pres)))
    v = classify(lifted["C"])
    assert v["biseparable"] and v["frobenius"] == "fail"


def test_hits_are_dumped(tmp_path):
    res = hunt_conjecture(HuntConfig(seed=7, budget=72, out=tmp_path))
    assert [h["trial"] for h in res.counterexamples] == [71]
    dumped = tmp_path / "hit_7_0071.pres"
    assert dumped.exists()
    p = parse_presentation(dumped.read_text())
    assert all(check_coring(p["C"]))
    assert res.log[-1] == f"hit 0071 confirmed over Q {dumped}"


def test_lift_recovers_rationals():
    reduced = parse_presentation(TEXTS["GAUSS"].replace("field q", "field fp:10007"))
    lifted = parse_presentation(print_presentation(lift_presentation(reduced)))
    assert lifted == fixture("GAUSS").presentation


def test_unliftable_entry_is_an_artifact():
    text = TEXTS["TRIV"].replace("field q", "field fp:10007").replace("element g C : 1", "element g C : 1009")
    p = parse_presentation(text)
    assert lift_presentation(p) is None
    assert audit_over_q(p) == ARTIFACT


def test_zoo_trials_match_golden():
    res = hunt_conjecture(HuntConfig(seed=3, budget=30))
    zoo_trials = [t for t in res.trials if t.family == "zoo" and not t.skipped]
    assert zoo_trials
    assert all(t.consistent for t in zoo_trials)
