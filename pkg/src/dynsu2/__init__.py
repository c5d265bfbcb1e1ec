"""Symbolic computation and exact randomized verification for the SU(2)
dynamical quantum group F_R(SL(2)) and its *-form F_R(SU(2))."""

from .algebra import M2, SL2, AlgElement, antipode, counit, normalize, star, xi
from .coalgebra import TensorElement, coproduct
from .corep import cg, matelem
from .grammar import ParseError, parse
from .haar import moments, to_xi_poly
from .report import Checker
from .scalars import Point, Sampler, Scalar, is_zero
from .suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgElement", "Checker", "M2", "ParseError", "Point", "SL2", "SUITES", "Sampler",
    "Scalar", "TensorElement", "antipode", "cg", "coproduct", "counit", "is_zero",
    "matelem", "moments", "normalize", "parse", "run_suite", "star", "to_xi_poly", "xi",
]
