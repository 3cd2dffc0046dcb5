import pytest

from coringlab.exact import Field
from coringlab.presentation import (
    ParseError,
    check_presentation,
    coring_presentation,
    parse_decls,
    parse_presentation,
    print_presentation,
)
from coringlab.zoo import TEXTS, fixture

K = """\
field q
algebra K 1
  unit 1
  mul 0 0 : 1
end
"""

A2 = """\
algebra A 2
  unit 1 0
  mul 0 0 : 1 0
  mul 0 1 : 0 1
  mul 1 0 : 0 1
end
"""


def test_triv_parses_and_checks():
    p = parse_presentation(TEXTS["TRIV"])
    assert p.names("coring") == ["C"]
    assert all(check_presentation(p))


def test_matrix_shape_mismatch_is_semantic():
    text = K + A2 + "extension E K A\n  embed 2x2 [1 0; 0 1; 0 0]\nend\n"
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    e = err.value
    assert e.kind == "semantic"
    assert e.line == text.splitlines().index("  embed 2x2 [1 0; 0 1; 0 0]") + 1
    assert "declared 2x2" in e.msg and "3x2" in e.msg


@pytest.mark.parametrize("name", sorted(TEXTS))
def test_print_parse_round_trip(name):
    p = fixture(name).presentation
    again = parse_presentation(print_presentation(p))
    assert again == p
    assert print_presentation(again) == print_presentation(p)


def test_diag2_structural_equality_ignores_layout():
    text = TEXTS["DIAG2"]
    noisy = "# leading comment\n\n" + text.replace("\n", "   # trailing\n", 3)
    assert parse_presentation(noisy) == parse_presentation(text)


def test_explicit_dump_round_trip():
    c = fixture("DIAG2").coring
    p = coring_presentation(c)
    q = parse_presentation(print_presentation(p))
    assert q == p
    assert q["C"].coproduct == c.coproduct
    assert q["C"].counit == c.counit


def test_field_override_reduces_mod_p():
    p = parse_presentation(TEXTS["GAUSS"].replace("field q", "field fp:10007"))
    assert p.field == Field(10007)
    assert all(check_presentation(p))


def test_sparse_matrix_syntax():
    dense = K + A2 + "extension E K A\n  embed 2x1 [1; 0]\nend\n"
    sparse = K + A2 + "extension E K A\n  embed 2x1 {0,0:1}\nend\n"
    assert parse_presentation(dense) == parse_presentation(sparse)


MALFORMED = {
    "unknown declaration": ("field q\nfrobnicate X\n", "syntax", 2),
    "missing end": ("field q\nalgebra K 1\n  unit 1\n", "syntax", 2),
    "zero denominator": ("field q\nalgebra K 1\n  unit 1/0\nend\n", "semantic", 3),
    "undeclared reference": ("field q\ncoring C trivial Z\n", "semantic", 2),
    "unit law broken": ("field q\nalgebra K 1\n  unit 1\n  mul 0 0 : 2\nend\n", "semantic", 2),
    "composite modulus": ("field fp:10\n", "semantic", 1),
    "duplicate name": (K + "algebra K 1\n  unit 1\n  mul 0 0 : 1\nend\n", "semantic", 6),
    "element length": (K + "coring C trivial K\nelement g C : 1 0\n", "semantic", 7),
}


@pytest.mark.parametrize("case", sorted(MALFORMED))
def test_malformed_corpus(case):
    text, kind, line = MALFORMED[case]
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert err.value.kind == kind
    assert err.value.line == line
    assert str(err.value).startswith(f"{line}:{err.value.col}: {kind} error:")


def test_broken_counit_is_semantic():
    p = coring_presentation(fixture("DIAG2").coring)
    dump = print_presentation(p)
    lines = dump.splitlines()
    i = next(k for k, ln in enumerate(lines) if ln.strip().startswith("counit"))
    lines[i] = lines[i].replace(" 1", " 2", 1)
    with pytest.raises(ParseError) as err:
        parse_presentation("\n".join(lines) + "\n")
    assert err.value.kind == "semantic" and "counit" in err.value.msg


def test_decls_keep_positions():
    _, decls = parse_decls(TEXTS["GAUSS"])
    lines = TEXTS["GAUSS"].splitlines()
    for d in decls:
        assert lines[d.line - 1].split()[1] == d.name
