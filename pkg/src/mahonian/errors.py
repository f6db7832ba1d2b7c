"""Exception types raised across the package."""


class MahonianError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(MahonianError, ZeroDivisionError):
    pass


class NotAPolynomial(MahonianError, ValueError):
    """A rational function whose reduced denominator is not a unit."""


class NonIntegralResult(MahonianError, ValueError):
    """A closed form evaluated to a polynomial with non-integer coefficients."""


class TypeMismatch(MahonianError, ValueError):
    pass


class PreconditionViolation(MahonianError, ValueError):
    pass


class DisjointnessViolation(PreconditionViolation):
    """Two words handed to a shuffle share a letter (in absolute value)."""


class InvalidSpec(MahonianError, ValueError):
    pass


class UnknownIdentity(MahonianError, KeyError):
    pass
