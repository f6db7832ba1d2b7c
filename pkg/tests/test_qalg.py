from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mahonian.errors import DivisionByZero, NotAPolynomial
from mahonian.qalg import (ONE, Q, ZERO, QPoly, QRat, poly_gcd, q_binomial,
                           q_factorial, q_int, substitute)


def P(text):
    return QPoly.parse(text)


coeff = st.integers(-20, 20)
polys = st.builds(QPoly, st.lists(coeff, max_size=6), st.integers(-3, 3))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# -- q-analogs -------------------------------------------------------------------

@pytest.mark.parametrize("n, want", [(0, "0"), (1, "1"), (3, "1 + q + q^2")])
def test_q_int(n, want):
    assert q_int(n).render() == want


@pytest.mark.parametrize("n, want", [(0, "1"), (2, "1 + q"), (3, "1 + 2*q + 2*q^2 + q^3")])
def test_q_factorial(n, want):
    assert q_factorial(n).render() == want


@pytest.mark.parametrize("n, k, want", [(3, 2, "1 + q + q^2"), (5, 0, "1"), (2, 3, "0"),
                                        (4, 2, "1 + q + 2*q^2 + q^3 + q^4"), (3, -1, "0")])
def test_q_binomial_values(n, k, want):
    assert q_binomial(n, k).render() == want


def test_q_binomial_matches_factorial_quotient():
    for n in range(9):
        for k in range(n + 1):
            ratio = QRat(q_factorial(n), q_factorial(k) * q_factorial(n - k))
            assert ratio.to_poly() == q_binomial(n, k)


@pytest.mark.parametrize("n", range(13))
def test_q_binomial_symmetric_nonnegative(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b == q_binomial(n, n - k)
        assert all(c > 0 for c in b.coeffs)
        assert b.degree == k * (n - k)
        assert b(1) == q_binomial(n, k)(1) and b(1) == __import__("math").comb(n, k)


@pytest.mark.parametrize("p, sign, power, want", [
    ("1 + q", -1, 1, "1 - q"),
    ("1 + q", 1, 2, "1 + q^2"),
    ("1 + q + q^2 + q^3", -1, 1, "1 - q + q^2 - q^3"),
])
def test_substitute(p, sign, power, want):
    assert substitute(P(p), sign, power).render() == want
    assert P(p).substitute(sign, power) == P(want)


def test_substitute_rejects_bad_args():
    with pytest.raises(ValueError):
        substitute(Q, 2, 1)
    with pytest.raises(ValueError):
        substitute(Q, 1, 0)


# -- rendering and parsing ----------------------------------------------------------

@pytest.mark.parametrize("text", [
    "0", "1", "-1", "q", "-q^2", "1 + 2*q + 2*q^2 + q^3", "q^-2 + 3", "1/2*q - 3/4*q^5",
])
def test_render_parse_roundtrip(text):
    p = P(text)
    assert P(p.render()) == p


def test_render_canonical_order_and_signs():
    assert (Q ** 3 - 2 * Q + 1).render() == "1 - 2*q + q^3"
    assert (-Q ** 2).render() == "-q^2"
    assert QPoly.monomial(-2).render() == "q^-2"
    assert (Q * Fraction(1, 2)).render() == "1/2*q"


@given(polys)
def test_json_roundtrip(p):
    assert QPoly.from_json(p.to_json()) == p


def test_json_shape():
    assert (1 + Q * Fraction(3, 2)).to_json() == {"min_deg": 0, "coeffs": ["1/1", "3/2"]}


# -- ring axioms ------------------------------------------------------------------

@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(polys, polys)
def test_evaluation_is_a_homomorphism(a, b):
    for x in (Fraction(1, 3), -2, 1):
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)


@given(polys, nonzero_polys)
def test_exact_division(a, b):
    assert (a * b).exact_div(b) == a


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert QRat(a, g).is_polynomial() and QRat(b, g).is_polynomial()


def test_equality_and_hash_normalise():
    assert QPoly([0, 0, 1, 0]) == QPoly([1], 2)
    assert hash(QPoly([Fraction(2, 1)])) == hash(QPoly([2]))
    assert QPoly([0, 0]).is_zero() and QPoly([0]).degree == -1


def test_negative_power_only_for_monomials():
    assert (Q ** 2) ** -1 == QPoly.monomial(-2)
    with pytest.raises(NotAPolynomial):
        (1 + Q) ** -1


# -- rational functions -------------------------------------------------------------

def test_rational_examples():
    r = QRat(1 - Q, 1 + Q)
    assert (r * (1 + Q)).to_poly() == 1 - Q
    assert (r * q_factorial(3)).to_poly().render() == "1 - q^3"
    with pytest.raises(NotAPolynomial):
        QRat(ONE, 1 + Q).to_poly()


def test_rational_canonical_form():
    a = QRat((1 - Q) * (1 + Q), (1 + Q) * (2 + Q))
    b = QRat(1 - Q, 2 + Q)
    assert a == b and hash(a) == hash(b)
    assert QRat(Q ** 3, Q).to_poly() == Q ** 2
    assert QRat(ONE, Q).to_poly() == QPoly.monomial(-1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QRat(ONE, ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(polys, nonzero_polys, polys, nonzero_polys)
def test_rational_field_ops(a, b, c, d):
    x, y = QRat(a, b), QRat(c, d)
    assert x + y == y + x
    assert (x + y) - y == x
    assert x * y == y * x
    if not c.is_zero():
        assert (x * y) / y == x
