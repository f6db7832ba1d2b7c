"""Closed forms for (signed) Mahonian polynomials over the classical Weyl
groups and their derangements, plus the even-length derangement counts.

``eps = +1`` gives the plain generating polynomial, ``eps = -1`` the one
weighted by ``(-1)^length``. Every rational assembly is reduced at the end and
checked to be a polynomial with integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import NonIntegralResult, NotAPolynomial, PreconditionViolation
from .qalg import ONE, Q, ZERO, QPoly, QRat, q_binomial, q_factorial, q_int, substitute
from .stats import LengthType, des, fmaj, length, maj

__all__ = [
    "mahonian_S", "derangement_S", "even_derangement_S",
    "mahonian_B", "derangement_B", "even_derangement_B",
    "mahonian_D", "derangement_D", "even_derangement_D", "derangement_D_majA",
    "mahonian_Delta", "mahonian_DeltaLess", "derangement_Delta",
    "fiber_rhs", "shuffle_rhs", "even_derangement_count",
]

_RATIO = QRat(1 - Q, 1 + Q)   # (1-q)/(1+q)


def _check_eps(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")
    return eps


def _check_n(n: int, lo: int = 1) -> None:
    if n < lo:
        raise PreconditionViolation(f"n must be >= {lo}, got {n}")


def _finish(value, what: str) -> QPoly:
    try:
        poly = QRat.coerce(value).to_poly()
    except NotAPolynomial as exc:
        raise NonIntegralResult(f"{what}: {exc}") from None
    if not poly.is_integral() or poly.min_degree < 0:
        raise NonIntegralResult(f"{what} is not an integer polynomial: {poly}")
    return poly


def _ratio(eps: int) -> QRat:
    """``(1-q)/(1-eps*q)``."""
    return QRat(ONE) if eps == 1 else _RATIO


def _even_prod(k: int) -> QPoly:
    """``[2]_q [4]_q ... [2k]_q``; empty product is 1."""
    out = ONE
    for i in range(1, k + 1):
        out = out * q_int(2 * i)
    return out


def _even_prod_signed(k: int, eps: int) -> QPoly:
    """``[2]_{eps q} [4]_{eps^2 q} ... [2k]_{eps^k q}``."""
    out = ONE
    for i in range(1, k + 1):
        out = out * substitute(q_int(2 * i), eps ** i, 1)
    return out


def _falling(n: int, k: int, factor) -> QPoly:
    """``factor(k+1) * ... * factor(n)``, the exact quotient of two q-factorials."""
    out = ONE
    for i in range(k + 1, n + 1):
        out = out * factor(i)
    return out


# -- type A ------------------------------------------------------------------

def mahonian_S(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^inv * q^maj`` over S_n."""
    _check_n(n)
    eps = _check_eps(eps)
    value = QRat(q_factorial(n))
    if eps == -1:
        value = value * _RATIO ** (n // 2)
    return _finish(value, f"mahonian_S({n}, {eps})")


def derangement_S(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^inv * q^maj`` over the derangements in S_n."""
    _check_n(n)
    eps = _check_eps(eps)
    total = QRat(ZERO)
    for k in range(n + 1):
        term = QRat(_falling(n, k, q_int).shift(comb(k, 2)) * (-1) ** k)
        if eps == -1:
            term = term * _RATIO ** ((n - k) // 2)
        total = total + term
    return _finish(total, f"derangement_S({n}, {eps})")


def even_derangement_S(n: int) -> QPoly:
    _check_n(n)
    total = QRat(ZERO)
    for k in range(n + 1):
        head = _falling(n, k, q_int).shift(comb(k, 2)) * (-1) ** k
        total = total + QRat(head) * (QRat(1) + _RATIO ** ((n - k) // 2)) * Fraction(1, 2)
    return _finish(total, f"even_derangement_S({n})")


# -- type B ------------------------------------------------------------------

def mahonian_B(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_B * q^fmaj`` over B_n.

    The signed case carries ``ceil(n/2)`` factors of ``(1-q)/(1+q)``, one per
    odd ``i`` in ``[2i]_{-q}``.
    """
    _check_n(n)
    eps = _check_eps(eps)
    value = QRat(_even_prod(n))
    if eps == -1:
        value = value * _RATIO ** ((n + 1) // 2)
    return _finish(value, f"mahonian_B({n}, {eps})")


def _two_q_int(i: int) -> QPoly:
    return q_int(2 * i)


def derangement_B(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_B * q^fmaj`` over the signed derangements in B_n."""
    _check_n(n)
    eps = _check_eps(eps)
    total = QRat(ZERO)
    for k in range(n + 1):
        term = QRat(_falling(n, k, _two_q_int).shift(2 * comb(k, 2)) * (-1) ** k)
        if eps == -1:
            term = term * _RATIO ** ((n - k + 1) // 2)
        total = total + term
    return _finish(total, f"derangement_B({n}, {eps})")


def even_derangement_B(n: int) -> QPoly:
    _check_n(n)
    total = QRat(ZERO)
    for k in range(n + 1):
        head = _falling(n, k, _two_q_int).shift(2 * comb(k, 2)) * (-1) ** k
        total = total + QRat(head) * (QRat(1) + _RATIO ** ((n - k + 1) // 2)) * Fraction(1, 2)
    return _finish(total, f"even_derangement_B({n})")


# -- type D and the Delta sets -----------------------------------------------

def mahonian_D(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_D * q^Dmaj`` over D_n: ``[2]_{-q}[4]_q ... [n]_q`` when signed."""
    _check_n(n)
    eps = _check_eps(eps)
    signs = -1 if eps == -1 else 1
    return _finish(_even_prod_signed(n - 1, signs) * q_int(n), f"mahonian_D({n}, {eps})")


def mahonian_Delta(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_B * q^fmaj`` over words of B_n ending in a positive letter."""
    _check_n(n)
    eps = _check_eps(eps)
    value = _even_prod_signed(n - 1, eps) * substitute(q_int(n), eps ** n, 1)
    return _finish(value, f"mahonian_Delta({n}, {eps})")


def mahonian_DeltaLess(n: int, eps: int = 1) -> QPoly:
    """As :func:`mahonian_Delta` but the last letter lies in ``1..n-1``; zero for n = 1."""
    _check_n(n)
    eps = _check_eps(eps)
    if n == 1:
        return ZERO
    value = (_even_prod_signed(n - 1, eps) * substitute(q_int(n - 1), eps ** n, 1)
             ).shift(1) * eps ** n
    return _finish(value, f"mahonian_DeltaLess({n}, {eps})")


def derangement_Delta(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_B * q^fmaj`` over derangements ending in a positive letter."""
    _check_n(n)
    eps = _check_eps(eps)
    if n == 1:
        return ZERO
    total = QRat(ZERO)
    for k in range(n - 1):
        head = (_falling(n - 1, k, _two_q_int) * q_int(n - k - 1)
                ).shift(k * k + k + 1) * ((-1) ** k * eps ** (n - k))
        total = total + QRat(head) * _ratio(eps) ** (-(-(n - k) // 2))
    return _finish(total, f"derangement_Delta({n}, {eps})")


def _d_plus_term(n: int, k: int) -> QRat:
    inner = QRat(q_int(n - 1 - k).shift(2 * k + 1)) + \
        (QRat(1) - _RATIO ** (n - k - 1)) * Fraction(1, 2)
    head = _falling(n - 1, k, _two_q_int).shift(2 * comb(k, 2)) * (-1) ** k
    return QRat(head) * inner


def _d_minus_term(n: int, k: int) -> QRat:
    m = n - k
    numer = (ONE + QPoly.monomial(m - 1, (-1) ** m)).shift(2 * k + 1) * 2 \
        - Q * (1 + (-1) ** m)
    head = _falling(n - 1, k, _two_q_int).shift(2 * comb(k, 2)) * (-1) ** (n - 1)
    return QRat(head) * _RATIO ** (m // 2) * QRat(numer, (1 - Q) * 2)


def derangement_D(n: int, eps: int = 1) -> QPoly:
    """Sum of ``eps^length_D * q^Dmaj`` over the derangements in D_n.

    Defined for ``n >= 2``; ``n == 1`` returns the empty sum 0.
    """
    _check_n(n)
    eps = _check_eps(eps)
    term = _d_plus_term if eps == 1 else _d_minus_term
    total = QRat(ZERO)
    for k in range(n - 1):
        total = total + term(n, k)
    return _finish(total, f"derangement_D({n}, {eps})")


def even_derangement_D(n: int) -> QPoly:
    _check_n(n)
    total = QRat(ZERO)
    for k in range(n - 1):
        total = total + (_d_plus_term(n, k) + _d_minus_term(n, k)) * Fraction(1, 2)
    return _finish(total, f"even_derangement_D({n})")


def derangement_D_majA(n: int) -> QPoly:
    """Sum of ``q^maj`` (natural letter order) over the derangements in D_n."""
    _check_n(n)
    total = QPoly.monomial(comb(n, 2), Fraction((-1) ** n, 2))
    for k in range(n + 1):
        coeff = Fraction(2) ** (n - 1 - k) * (-1) ** k
        total = total + _falling(n, k, q_int).shift(comb(k, 2)) * coeff
    return _finish(total, f"derangement_D_majA({n})")


# -- fibers and shuffles -----------------------------------------------------

def fiber_rhs(kind: str, n: int, sigma: Sequence[int], eps: int = 1) -> QPoly:
    """Weighted sum over ``{pi : dp(pi) == sigma}`` for ``kind`` in ``s``, ``b``, ``delta-less``."""
    eps = _check_eps(eps)
    sigma = tuple(sigma)
    k = len(sigma)
    if k > n:
        raise PreconditionViolation(f"derangement of size {k} does not fit in n={n}")
    kind = kind.lower()
    if kind in ("s", "a"):
        sign = eps ** length(sigma, LengthType.A)
        value = q_binomial(n, k).shift(maj(sigma)) * sign
    elif kind in ("b", "b-full"):
        sign = eps ** length(sigma, LengthType.B)
        value = substitute(q_binomial(n, k), 1, 2).shift(fmaj(sigma)) * sign
    elif kind in ("delta-less", "deltaless"):
        if k < 1:
            raise PreconditionViolation("delta-less fibers need a nonempty derangement")
        sign = eps ** length(sigma, LengthType.B)
        value = substitute(q_binomial(n - 1, k - 1), 1, 2).shift(2 * (n - k) + fmaj(sigma)) * sign
    else:
        raise ValueError(f"unknown fiber kind {kind!r}")
    return _finish(value, f"fiber_rhs({kind}, {n}, {sigma})")


def _special(x: int) -> tuple:
    return (0, -x) if x < 0 else (1, x)


def shuffle_rhs(kind: str, sigma: Sequence[int], pi: Sequence[int],
                k: int | None = None) -> QPoly:
    """Closed-form sum of a statistic over shuffles of ``sigma`` (left) and ``pi`` (right).

    ``maj-unsigned``: ``q^maj`` over all shuffles; ``fmaj``: ``q^fmaj`` over
    all shuffles; ``fmaj-sb``: ``q^fmaj`` over shuffles ending in ``sigma``'s
    last letter, needing that letter to precede ``pi``'s last letter in the
    special order; ``maj-refined``: ``q^maj`` over the same restricted
    shuffles with exactly ``k`` descents, for unsigned words with
    ``pi[-1] > sigma[-1]``.
    """
    sigma, pi = tuple(sigma), tuple(pi)
    m, n = len(sigma), len(pi)
    if kind == "maj-unsigned":
        value = q_binomial(n + m, n).shift(maj(sigma) + maj(pi))
    elif kind == "fmaj":
        value = substitute(q_binomial(n + m, n), 1, 2).shift(fmaj(sigma) + fmaj(pi))
    elif kind == "fmaj-sb":
        if not sigma or not pi or not _special(sigma[-1]) < _special(pi[-1]):
            raise PreconditionViolation("fmaj-sb needs sigma's last letter to precede pi's")
        value = substitute(q_binomial(n + m - 1, n), 1, 2).shift(fmaj(sigma) + fmaj(pi) + 2 * n)
    elif kind == "maj-refined":
        if k is None:
            raise PreconditionViolation("maj-refined needs a descent count k")
        if not sigma or not pi or not pi[-1] > sigma[-1]:
            raise PreconditionViolation("maj-refined needs pi's last letter above sigma's")
        ds, dp_ = des(sigma), des(pi)
        value = q_binomial(m - ds + dp_, k - ds) * q_binomial(n - dp_ + ds - 1, n - k + ds)
        if not value.is_zero():
            value = value.shift(maj(sigma) + maj(pi) + n + (k - dp_ - 1) * (k - ds))
    else:
        raise ValueError(f"unknown shuffle kind {kind!r}")
    return _finish(value, f"shuffle_rhs({kind})")


# -- counts ------------------------------------------------------------------

_COUNT_FAMILIES = ("as", "ab", "ad")


def _closed(family: str, n: int) -> int:
    sign = (-1) ** (n - 1)
    if family == "as":
        if n == 1:
            return 0
        s = sum(Fraction((-1) ** k, factorial(k)) for k in range(n - 1))
        value = Fraction(factorial(n), 2) * s + sign * (n - 1)
    elif family == "ab":
        s = sum(Fraction(2 ** (n - k - 1) * (-1) ** k, factorial(k)) for k in range(n))
        value = factorial(n) * s + (-1) ** n
    else:
        if n == 1:
            return 0
        s = sum(Fraction(2 ** (n - k - 2) * (-1) ** k, factorial(k)) for k in range(n - 1))
        value = factorial(n) * s + sign * (n - 1)
    if value.denominator != 1:
        raise NonIntegralResult(f"closed form for {family} at n={n} gave {value}")
    return value.numerator


def _rec1(family: str, n: int) -> int:
    d = 0   # d_1 = 0 in all three families
    for m in range(2, n + 1):
        if family == "as":
            step = Fraction((-1) ** (m - 1) * (m - 2) * (m + 1), 2)
            d = m * d + step
        elif family == "ab":
            d = 2 * m * d + (-1) ** m * (m + 1)
        else:
            d = 2 * m * d + (-1) ** (m - 1) * (m * m - 2 * m - 1)
    if Fraction(d).denominator != 1:
        raise NonIntegralResult(f"first recurrence for {family} at n={n} gave {d}")
    return int(d)


def _rec2(family: str, n: int) -> int:
    init = {"as": (0, 0), "ab": (0, 3), "ad": (0, 1)}[family]
    if n <= 2:
        return init[n - 1]
    prev2, prev1 = init
    for m in range(3, n + 1):
        sign = (-1) ** (m - 1)
        if family == "as":
            cur = (m - 1) * (prev1 + prev2 + sign)
        elif family == "ab":
            cur = (m - 1) * (2 * prev1 + 4 * prev2 + sign)
        else:
            cur = (2 * m - 1) * prev1 + 2 * (m - 1) * prev2 + sign * (2 * m - 3)
        prev2, prev1 = prev1, cur
    return prev1


def even_derangement_count(family: str, n: int, method: str = "closed") -> int:
    """Number of even-length derangements in S_n (``as``), B_n (``ab``) or D_n (``ad``).

    ``method`` is ``closed``, ``rec1`` (first-order recurrence) or ``rec2``
    (second-order recurrence, seeded with the values at n = 1 and 2).
    """
    family = family.lower()
    if family not in _COUNT_FAMILIES:
        raise ValueError(f"unknown count family {family!r}")
    _check_n(n)
    if method == "closed":
        return _closed(family, n)
    if method == "rec1":
        return _rec1(family, n)
    if method == "rec2":
        return _rec2(family, n)
    raise ValueError(f"unknown method {method!r}")
