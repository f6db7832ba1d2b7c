"""Exact Laurent polynomials and rational functions in a single variable ``q``.

Coefficients are Python integers where possible and :class:`fractions.Fraction`
otherwise, so every computation is exact. Both :class:`QPoly` and
:class:`QRat` are immutable and keep a canonical form, which makes equality a
plain coefficient-wise comparison.

>>> q_factorial(3)
QPoly('1 + 2*q + 2*q^2 + q^3')
>>> (q_factorial(3) * QRat(1 - Q, 1 + Q)).to_poly()
QPoly('1 - q^3')
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Union

from .errors import DivisionByZero, NotAPolynomial

__all__ = [
    "QPoly", "QRat", "Q", "ONE", "ZERO",
    "q_int", "q_factorial", "q_binomial", "substitute", "poly_gcd",
]

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    # ints stay ints: integer-only arithmetic is several times faster
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _trim(min_degree: int, coeffs: list) -> tuple[int, tuple]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return min_degree + lo, tuple(coeffs[lo:hi])


class QPoly:
    """A Laurent polynomial ``sum(c_i * q^(min_degree + i))``.

    The coefficient tuple never has zero entries at either end; the zero
    polynomial is ``min_degree == 0`` with no coefficients.
    """

    __slots__ = ("_min", "_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), min_degree: int = 0):
        self._min, self._coeffs = _trim(min_degree, [_norm(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, min_degree: int, coeffs: list) -> "QPoly":
        p = cls.__new__(cls)
        coeffs = [c if type(c) is int else _norm(c) for c in coeffs]
        p._min, p._coeffs = _trim(min_degree, coeffs)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: Coeff = 1) -> "QPoly":
        return cls([coeff], degree)

    @classmethod
    def from_dict(cls, terms: dict) -> "QPoly":
        """Build from ``{degree: coefficient}``."""
        terms = {d: c for d, c in terms.items() if c != 0}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(d, 0) for d in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Rational)):
            return cls([other])
        raise TypeError(f"cannot convert {type(other).__name__} to QPoly")

    # -- accessors --------------------------------------------------------

    @property
    def min_degree(self) -> int:
        return self._min

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Top degree; ``-1`` for the zero polynomial."""
        if not self._coeffs:
            return -1
        return self._min + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return not self._coeffs or (self._min == 0 and len(self._coeffs) == 1)

    def is_integral(self) -> bool:
        return all(type(c) is int or c.denominator == 1 for c in self._coeffs)

    def leading(self) -> Coeff:
        return self._coeffs[-1] if self._coeffs else 0

    def __getitem__(self, degree: int) -> Coeff:
        i = degree - self._min
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def items(self) -> Iterator[tuple[int, Coeff]]:
        """Nonzero ``(degree, coefficient)`` pairs in increasing degree."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                yield self._min + i, c

    def to_dict(self) -> dict[int, Coeff]:
        return dict(self.items())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QRat):
            return NotImplemented
        other = QPoly.coerce(other)
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._min, other._min)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._coeffs):
            out[self._min - lo + i] += c
        for i, c in enumerate(other._coeffs):
            out[other._min - lo + i] += c
        return QPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(self._min, [-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, QRat):
            return NotImplemented
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QRat):
            return NotImplemented
        if isinstance(other, (int, Rational)):
            c = _norm(other)
            return QPoly._raw(self._min, [_norm(a * c) for a in self._coeffs])
        other = QPoly.coerce(other)
        if not self._coeffs or not other._coeffs:
            return ZERO
        a, b = self._coeffs, other._coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return QPoly._raw(self._min + other._min, [_norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self._coeffs) != 1:
                raise NotAPolynomial(f"negative power of non-monomial {self}")
            c = Fraction(1) / self._coeffs[0]
            return QPoly.monomial(-self._min, c) ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division of QPoly by zero")
            return self * (Fraction(1) / Fraction(other))
        return QRat(self, QPoly.coerce(other))

    def __rtruediv__(self, other):
        return QRat(QPoly.coerce(other), self)

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q^k``."""
        if not self._coeffs:
            return self
        return QPoly._raw(self._min + k, list(self._coeffs))

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Divide by ``other``; raises :class:`NotAPolynomial` on a remainder."""
        return (self / other).to_poly()

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._min == other._min and self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            return self == QPoly.coerce(other)
        if isinstance(other, QRat):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._min, self._coeffs))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    # -- evaluation / substitution -----------------------------------------

    def __call__(self, x):
        """Evaluate exactly at a rational (or integer) point."""
        if self._min < 0 and x == 0:
            raise DivisionByZero("Laurent polynomial evaluated at 0")
        total = 0
        for d, c in self.items():
            total += c * (Fraction(x) ** d if d < 0 else x ** d)
        return _norm(total)

    def substitute(self, sign: int, power: int) -> "QPoly":
        """Replace ``q`` by ``sign * q^power``."""
        return substitute(self, sign, power)

    # -- rendering --------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, increasing degree: ``1 + 2*q + 2*q^2 + q^3``."""
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self.items():
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"QPoly({self.render()!r})"

    def to_json(self) -> dict:
        return {
            "min_deg": self._min,
            "coeffs": [f"{Fraction(c).numerator}/{Fraction(c).denominator}"
                       for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "QPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([Fraction(c) for c in data["coeffs"]], data["min_deg"])

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of :meth:`render`; also tolerates ``q**k`` and missing spaces."""
        src = text.replace("**", "^").replace(" ", "")
        if src in ("", "0"):
            return ZERO
        if src[0] not in "+-":
            src = "+" + src
        terms: dict[int, Fraction] = {}
        pos = 0
        for m in _TERM.finditer(src):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            sign, coeff, var, exp = m.group("sign", "coeff", "var", "exp")
            if coeff is None and var is None:
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = Fraction(coeff) if coeff is not None else Fraction(1)
            if sign == "-":
                c = -c
            d = 0 if var is None else (int(exp) if exp is not None else 1)
            terms[d] = terms.get(d, 0) + c
        if pos != len(src):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls.from_dict(terms)


_TERM = re.compile(
    r"(?P<sign>[+-])(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?P<var>q(?:\^(?P<exp>-?\d+))?)?"
)

ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([1], 1)


# -- dense helpers on ordinary polynomials (lists, low degree first) --------

def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) <= db:
        return [], a
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
            f = c // lead
        else:
            f = _norm(Fraction(c) / lead)
        quot[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    rem = [_norm(c) for c in a[:db]]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _monic(p: list) -> list:
    lead = p[-1]
    if lead == 1:
        return p
    return [_norm(Fraction(c) / lead) for c in p]


def _ordinary(p: QPoly) -> list:
    """Coefficient list of ``p / q^min_degree`` (an ordinary polynomial)."""
    return list(p.coeffs)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over the rationals of the ordinary parts of ``a`` and ``b``.

    Powers of ``q`` are included: ``poly_gcd(q^2, q^3 + q^2) == q^2``.
    Laurent inputs are treated via their polynomial part, so the result is
    always an ordinary polynomial.
    """
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero():
        return QPoly(_monic(_ordinary(b)), max(b.min_degree, 0))
    if b.is_zero():
        return QPoly(_monic(_ordinary(a)), max(a.min_degree, 0))
    shift = max(min(a.min_degree, b.min_degree), 0)
    x, y = _ordinary(a), _ordinary(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        _, r = _poly_divmod(x, y)
        x, y = y, r
    return QPoly(_monic(x), shift)


class QRat:
    """A reduced quotient of two :class:`QPoly` values.

    Canonical form: the denominator is an ordinary polynomial with nonzero
    constant term and leading coefficient 1, coprime to the numerator. Any
    power of ``q`` lives in the (Laurent) numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = QPoly.coerce(num), QPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        # move q^k factors of the denominator into the numerator
        num = num.shift(-den.min_degree)
        dcoef = list(den.coeffs)
        if len(dcoef) > 1:
            ncoef = list(num.coeffs)
            g = ncoef if len(ncoef) >= len(dcoef) else dcoef
            h = dcoef if g is ncoef else ncoef
            while h:
                _, r = _poly_divmod(g, h)
                g, h = h, r
            if len(g) > 1:
                ncoef, _ = _poly_divmod(ncoef, g)
                dcoef, _ = _poly_divmod(dcoef, g)
            num = QPoly._raw(num.min_degree, ncoef)
        lead = dcoef[-1]
        if lead != 1:
            inv = Fraction(1) / Fraction(lead)
            num = num * inv
            dcoef = [_norm(c * inv) for c in dcoef]
        self.num, self.den = num, QPoly._raw(0, dcoef)

    @staticmethod
    def coerce(other) -> "QRat":
        if isinstance(other, QRat):
            return other
        return QRat(QPoly.coerce(other))

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_poly(self) -> QPoly:
        if not self.den.is_constant():
            raise NotAPolynomial(f"({self.num}) / ({self.den}) is not a polynomial")
        return self.num

    def __add__(self, other):
        other = QRat.coerce(other)
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = QRat.__new__(QRat)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-QRat.coerce(other))

    def __rsub__(self, other):
        return QRat.coerce(other) - self

    def __mul__(self, other):
        other = QRat.coerce(other)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRat.coerce(other)
        if other.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return QRat(ONE) / (self ** -exponent)
        return QRat(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        if isinstance(other, (QRat, QPoly, int, Rational)):
            other = QRat.coerce(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return f"QRat({self.num.render()!r})"
        return f"QRat({self.num.render()!r}, {self.den.render()!r})"


# -- q-analogs ---------------------------------------------------------------

def q_int(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q`` is the empty sum 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_int(i)
    return out


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial; zero outside ``0 <= k <= n``.

    Built with the q-Pascal rule so no division is needed.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    row = [ONE] + [ZERO] * k
    for m in range(1, n + 1):
        # [m, j] = [m-1, j-1] + q^j [m-1, j]
        for j in range(min(m, k), 0, -1):
            row[j] = row[j - 1] + row[j].shift(j)
    return row[k]


def substitute(p: QPoly, sign: int, power: int) -> QPoly:
    """``p`` with ``q`` replaced by ``sign * q^power``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if power < 1:
        raise ValueError("power must be a positive integer")
    terms = {}
    for d, c in p.items():
        terms[d * power] = -c if (sign < 0 and d % 2) else c
    return QPoly.from_dict(terms)
