"""Exact finite-dimensional computations with corings, A-rings and ring extensions.

Everything is linear algebra over Q (or F_p) with certificates that are
re-verified before they are returned.
"""

from .exact import QQ, Field, Mat
from .findim import Algebra, Bimodule, tensor
from .extension import RingExtension
from .corings import Coring, check_coring, solve_cointegral, sweedler_coring, trivial_coring
from .presentation import ParseError, parse_presentation, print_presentation
from .zoo import fixture, zoo

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "Algebra",
    "Bimodule",
    "Coring",
    "Field",
    "Mat",
    "ParseError",
    "RingExtension",
    "check_coring",
    "fixture",
    "parse_presentation",
    "print_presentation",
    "solve_cointegral",
    "sweedler_coring",
    "tensor",
    "trivial_coring",
    "zoo",
]
