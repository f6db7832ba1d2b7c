"""Exact (signed) Mahonian polynomials over derangements in S_n, B_n and D_n."""

from .errors import (DisjointnessViolation, DivisionByZero, InvalidSpec, MahonianError,
                     NonIntegralResult, NotAPolynomial, PreconditionViolation,
                     TypeMismatch, UnknownIdentity)
from .qalg import ONE, Q, ZERO, QPoly, QRat, q_binomial, q_factorial, q_int, substitute
from .weyl import GroupFamily, cardinality, iterate, parse_word, format_word
from .stats import Boundary, LengthType, LetterOrder
from .harness import BruteSpec, brute_sum, verify, verify_all
from ._core import BACKEND

__version__ = "0.1.0"

__all__ = [
    "MahonianError", "DivisionByZero", "NotAPolynomial", "NonIntegralResult", "TypeMismatch",
    "PreconditionViolation", "DisjointnessViolation", "InvalidSpec", "UnknownIdentity",
    "QPoly", "QRat", "Q", "ONE", "ZERO", "q_int", "q_factorial", "q_binomial", "substitute",
    "GroupFamily", "cardinality", "iterate", "parse_word", "format_word",
    "Boundary", "LengthType", "LetterOrder",
    "BruteSpec", "brute_sum", "verify", "verify_all", "BACKEND",
]
