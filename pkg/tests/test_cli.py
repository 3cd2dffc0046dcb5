import json

import pytest

from coringlab.cli import main
from coringlab.zoo import TEXTS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def pres(tmp_path):
    def write(text, name="f.pres"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_check_zoo_file(capsys, pres):
    code, out, _ = run(capsys, "check", pres(TEXTS["TRIV"]))
    assert code == 0 and ": pass" in out.splitlines()[0]


def test_analyze_triv_all_pass(capsys):
    code, out, _ = run(capsys, "analyze", "zoo:TRIV", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    statuses = {c["status"] for s in rep["sections"] for c in s["checks"]}
    assert statuses <= {"pass", "inapplicable"}


def test_analyze_nonsplit_reports_infeasible(capsys):
    code, out, _ = run(capsys, "analyze", "zoo:NONSPLIT", "--json")
    rep = json.loads(out)
    assert code == 0
    by_name = {s["name"]: s for s in rep["sections"]}
    assert by_name["coseparable"]["checks"][0]["status"] == "infeasible"
    assert by_name["frobenius"]["checks"][0]["status"] == "inapplicable"


def test_morita_diag2(capsys):
    code, out, _ = run(capsys, "morita", "zoo:DIAG2", "-g", "one⊗one", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["B_dim"] == 2 and rep["summary"]["Q_dim"] == 4 and rep["summary"]["strict"] is True


def test_morita_bad_grouplike(capsys):
    code, out, _ = run(capsys, "morita", "zoo:DIAG2", "-g", "e11⊗e11", "--trace")
    assert code == 1
    assert "trace [grouplike] grouplike" in out


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "zoo:GAUSS", "--side", "left")
    assert code == 0 and "frobenius" in out


def test_hunt_deterministic(capsys, tmp_path):
    first = run(capsys, "hunt", "--budget", "10", "--seed", "7")
    second = run(capsys, "hunt", "--budget", "10", "--seed", "7", "--out", str(tmp_path))
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    assert (tmp_path / "hunt_7.log").read_text() == first[1]


def test_hunt_budget_zero(capsys):
    assert run(capsys, "hunt", "--budget", "0")[:2] == (0, "")


def test_zoo_listing_and_write(capsys, tmp_path):
    code, out, _ = run(capsys, "zoo")
    assert code == 0 and len(out.splitlines()) == len(TEXTS)
    code, out, _ = run(capsys, "zoo", "DIAG2", "--write", str(tmp_path), "--golden")
    assert code == 0 and (tmp_path / "DIAG2.pres").exists()
    assert "# strict = True" in out


def test_field_override(capsys):
    code, out, _ = run(capsys, "check", "zoo:GAUSS", "--field", "fp:10007", "--json")
    assert code == 0


def test_exit_codes(capsys, pres, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.pres"))[0] == 2
    assert run(capsys, "check", pres("field q\nfrobnicate X\n"))[0] == 2
    code, _, err = run(capsys, "check", pres("field q\ncoring C trivial Z\n"))
    assert code == 1 and "2:1: semantic error" in err
    assert run(capsys, "check", "zoo:NOPE")[0] == 2
    assert run(capsys, "check", "zoo:TRIV", "--field", "fp:12")[0] == 2
    assert run(capsys, "morita", "zoo:DIAG2", "-g", "zz")[0] == 2


def test_perturbed_counit_exit_one(capsys, pres):
    from coringlab.presentation import coring_presentation, print_presentation
    from coringlab.zoo import fixture

    lines = print_presentation(coring_presentation(fixture("DIAG2").coring)).splitlines()
    i = next(k for k, ln in enumerate(lines) if ln.strip().startswith("counit"))
    lines[i] = lines[i].replace(" 1", " 2", 1)
    code, _, err = run(capsys, "check", pres("\n".join(lines) + "\n"))
    assert code == 1 and "counit" in err


def test_json_is_deterministic(capsys):
    a = run(capsys, "analyze", "zoo:GAUSS", "--json", "--seed", "2")[1]
    b = run(capsys, "analyze", "zoo:GAUSS", "--json", "--seed", "2")[1]
    assert a == b
