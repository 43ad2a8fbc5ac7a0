from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.numeric import Sqrt2Number
from algebra.polyring import BiPoly, L, X
from errors import ParseError

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
coefficients = st.builds(Sqrt2Number, small, small)
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monomials, coefficients, max_size=5).map(BiPoly)


def test_constructors_and_degrees():
    p = X ** 2 - X * L + 3
    assert p.degree_x() == 2
    assert p.degree_l() == 1
    assert p.coefficient(1, 1) == -1
    assert p.coefficient(0, 0) == 3
    assert BiPoly.zero().degree_x() == -1
    assert BiPoly.constant(5).is_constant()
    assert not X.is_constant()


def test_zero_coefficients_are_dropped():
    p = X + L - X
    assert p == L
    assert len(p) == 1
    assert BiPoly({(2, 0): 0}).is_zero()


def test_display():
    assert str(X ** 2 - X * L) == "X^2 - X*L"
    assert str(BiPoly.zero()) == "0"
    assert str(-X + 1) == "-X + 1"


def test_substitutions():
    p = X ** 2 + L
    assert p.substitute_x(X + 1) == X ** 2 + 2 * X + 1 + L
    assert p.substitute_lambda(Fraction(1, 2)) == X ** 2 + Fraction(1, 2)
    assert p.set_lambda_zero() == X ** 2
    assert (X * L).substitute_x(X + L) == X * L + L ** 2


def test_evaluate_with_sqrt2():
    p = X * X - 2
    assert p.evaluate(Sqrt2Number.sqrt2(), 0) == 0


def test_json_round_trip_and_order():
    p = 3 * X ** 2 * L - Fraction(1, 2) * X + Sqrt2Number(0, 1)
    assert BiPoly.from_json(p.to_json()) == p
    assert [(t["dx"], t["dl"]) for t in p.to_json_obj()] == [(2, 1), (1, 0), (0, 0)]
    assert p.to_json_obj()[-1]["c"] == "1*s2"


@pytest.mark.parametrize("text", [
    "{}",
    "[{\"dx\": 1}]",
    "[{\"dx\": 1, \"dl\": 0, \"c\": \"1\"}, {\"dx\": 1, \"dl\": 0, \"c\": \"2\"}]",
    "[{\"dx\": 0, \"dl\": 0, \"c\": \"1/0\"}]",
    "not json",
])
def test_malformed_json(text):
    with pytest.raises(ParseError):
        BiPoly.from_json(text)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == BiPoly.zero()


@given(polys, polys, small, small)
def test_evaluation_is_a_homomorphism(p, q, x, lam):
    assert (p * q).evaluate(x, lam) == p.evaluate(x, lam) * q.evaluate(x, lam)
    assert (p + q).evaluate(x, lam) == p.evaluate(x, lam) + q.evaluate(x, lam)


@given(polys, polys)
def test_substitution_is_a_homomorphism(p, q):
    shift = X + L
    assert (p * q).substitute_x(shift) == p.substitute_x(shift) * q.substitute_x(shift)
