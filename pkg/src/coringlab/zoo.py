"""Named fixtures, each a presentation text plus its frozen property vector."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .presentation import Presentation, parse_presentation

M2 = """\
algebra M2 4
  labels e11 e12 e21 e22
  unit 1 0 0 1
  mul e11 e11 : 1 0 0 0
  mul e11 e12 : 0 1 0 0
  mul e12 e21 : 1 0 0 0
  mul e12 e22 : 0 1 0 0
  mul e21 e11 : 0 0 1 0
  mul e21 e12 : 0 0 0 1
  mul e22 e21 : 0 0 1 0
  mul e22 e22 : 0 0 0 1
end
"""

K = """\
algebra K 1
  labels one
  unit 1
  mul one one : 1
end
"""

TEXTS = {
    "TRIV": """\
field q
""" + K + """\
coring C trivial K
element g C : 1
""",
    "DIAG2": """\
field q
""" + M2 + """\
algebra D2 2
  labels p1 p2
  unit 1 1
  mul p1 p1 : 1 0
  mul p2 p2 : 0 1
end
extension E D2 M2
  embed 4x2 [1 0; 0 0; 0 0; 0 1]
  expectation 2x4 [1 0 0 0; 0 0 0 1]
end
coring C sweedler E
element g C : 1 0 0 1 0 0 0 0 0 0 0 0 1 0 0 1
""",
    "GAUSS": """\
field q
""" + K + """\
algebra G 2
  labels one i
  unit 1 0
  mul one one : 1 0
  mul one i : 0 1
  mul i one : 0 1
  mul i i : -1 0
end
extension E K G
  embed 2x1 [1; 0]
  expectation 1x2 [1 0]
end
coring C sweedler E
element g C : 1 0 0 0
""",
    "C2GROUP": """\
field q
""" + K + """\
algebra QC2 2
  labels one t
  unit 1 0
  mul one one : 1 0
  mul one t : 0 1
  mul t one : 0 1
  mul t t : 1 0
end
extension E K QC2
  embed 2x1 [1; 0]
  expectation 1x2 [1 0]
end
coring C sweedler E
element g C : 1 0 0 0
""",
    "DUALNUM": """\
field q
""" + K + """\
algebra D 2
  labels one x
  unit 1 0
  mul one one : 1 0
  mul one x : 0 1
  mul x one : 0 1
end
extension E K D
  embed 2x1 [1; 0]
  expectation 1x2 [1 0]
end
coring C sweedler E
element g C : 1 0 0 0
""",
    # V = span(e11, e22, e33, e13, e23) inside M3, over B = span(1, e11, e23)
    "NONSPLIT": """\
field q
algebra V 5
  labels e11 e22 e33 e13 e23
  unit 1 1 1 0 0
  mul e11 e11 : 1 0 0 0 0
  mul e11 e13 : 0 0 0 1 0
  mul e22 e22 : 0 1 0 0 0
  mul e22 e23 : 0 0 0 0 1
  mul e33 e33 : 0 0 1 0 0
  mul e13 e33 : 0 0 0 1 0
  mul e23 e33 : 0 0 0 0 1
end
algebra W 3
  labels one p n
  unit 1 0 0
  mul one one : 1 0 0
  mul one p : 0 1 0
  mul one n : 0 0 1
  mul p one : 0 1 0
  mul p p : 0 1 0
  mul n one : 0 0 1
end
extension E W V
  embed 5x3 [1 1 0; 1 0 0; 1 0 0; 0 0 0; 0 0 1]
end
coring C sweedler E
""",
    "DIRSUM": """\
field q
""" + M2 + """\
coring T1 trivial M2
coring T2 trivial M2
coring C dirsum T1 T2
element g C : 1 0 0 1 0 0 0 0
""",
}


@dataclass(frozen=True)
class Fixture:
    name: str
    text: str
    golden: dict

    @property
    def presentation(self) -> Presentation:
        return _parsed(self.name)

    @property
    def coring(self):
        return self.presentation["C"]

    @property
    def extension(self):
        p = self.presentation
        return p["E"] if "E" in p.objects else None

    @property
    def grouplike(self):
        p = self.presentation
        return p["g"] if "g" in p.objects else None


# Frozen property vectors.  Keys absent from a vector do not apply to that
# fixture (no extension, no grouplike, or no cointegral to build a context).
GOLDEN = {
    "TRIV": {
        "coring": True, "coseparable": True, "cosplit": True, "fgp_left": True, "fgp_right": True,
        "biseparable": True, "frobenius": "pass", "centrally_projective": 1,
        "grouplike": True, "g_left_unit": True, "strict": True, "B_dim": 1, "Q_dim": 1,
    },
    "DIAG2": {
        "coring": True, "coseparable": True, "cosplit": True, "fgp_left": True, "fgp_right": True,
        "biseparable": True, "frobenius": "pass", "centrally_projective": 2,
        "split": True, "separable": True, "ext_frobenius": True,
        "grouplike": True, "g_left_unit": False, "strict": True, "B_dim": 2, "Q_dim": 4,
    },
    "GAUSS": {
        "coring": True, "coseparable": True, "cosplit": True, "fgp_left": True, "fgp_right": True,
        "biseparable": True, "frobenius": "pass", "centrally_projective": None,
        "split": True, "separable": True, "ext_frobenius": True,
        "grouplike": True, "g_left_unit": False, "strict": True, "B_dim": 1, "Q_dim": 2,
    },
    "C2GROUP": {
        "coring": True, "coseparable": True, "cosplit": True, "fgp_left": True, "fgp_right": True,
        "biseparable": True, "frobenius": "pass", "centrally_projective": None,
        "split": True, "separable": True, "ext_frobenius": True,
        "grouplike": True, "g_left_unit": False, "strict": True, "B_dim": 1, "Q_dim": 2,
    },
    "DUALNUM": {
        "coring": True, "coseparable": True, "cosplit": False, "fgp_left": True, "fgp_right": True,
        "biseparable": False, "frobenius": "pass", "centrally_projective": None,
        "split": True, "separable": False, "ext_frobenius": True,
        "grouplike": True, "g_left_unit": False, "strict": True, "B_dim": 1, "Q_dim": 2,
    },
    "NONSPLIT": {
        "coring": True, "coseparable": False, "cosplit": False, "fgp_left": False, "fgp_right": False,
        "biseparable": False, "frobenius": "inapplicable", "centrally_projective": None,
        "split": False, "separable": False, "ext_frobenius": False,
    },
    "DIRSUM": {
        "coring": True, "coseparable": True, "cosplit": True, "fgp_left": True, "fgp_right": True,
        "biseparable": True, "frobenius": "pass", "centrally_projective": 2,
        "grouplike": True, "g_left_unit": False, "strict": False, "B_dim": 4, "Q_dim": 4,
    },
}


@lru_cache(maxsize=None)
def _parsed(name: str) -> Presentation:
    return parse_presentation(TEXTS[name])


def zoo() -> dict[str, Fixture]:
    return {n: Fixture(n, TEXTS[n], GOLDEN[n]) for n in TEXTS}


def fixture(name: str) -> Fixture:
    if name not in TEXTS:
        raise KeyError(f"no fixture {name!r}; known: {', '.join(TEXTS)}")
    return Fixture(name, TEXTS[name], GOLDEN[name])
