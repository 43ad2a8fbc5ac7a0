from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.numeric import HalfInt, Sqrt2Number, format_rational, parse_rational, two_pow
from errors import InvalidOperandError, ParseError

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
sqrt2_numbers = st.builds(Sqrt2Number, rationals, rationals)
nonzero_sqrt2 = sqrt2_numbers.filter(lambda z: not z.is_zero())


class TestRationalText:
    def test_round_trip_forms(self):
        assert parse_rational("3") == 3
        assert parse_rational("-7/21") == Fraction(-1, 3)
        assert format_rational(Fraction(-1, 3)) == "-1/3"
        assert format_rational(4) == "4"

    @pytest.mark.parametrize("text", ["", "1/0", "abc", "1.5", "1//2", "/2"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_rational(text)


class TestSqrt2Number:
    def test_conjugate_product_is_norm(self):
        z = Sqrt2Number(1, 1)
        assert z * z.conjugate() == -1
        assert z.norm() == -1

    def test_inverse(self):
        assert Sqrt2Number(1, 1).inverse() == Sqrt2Number(-1, 1)
        assert Sqrt2Number(1, 1) ** -1 == Sqrt2Number(-1, 1)

    def test_sqrt2_squared(self):
        assert Sqrt2Number.sqrt2() ** 2 == 2
        assert (Sqrt2Number.sqrt2() ** 2).is_rational()

    def test_division_by_zero(self):
        with pytest.raises(InvalidOperandError):
            Sqrt2Number(1) / 0
        with pytest.raises(ZeroDivisionError):
            Sqrt2Number(0, 0).inverse()

    def test_mixed_arithmetic_and_hash(self):
        assert Sqrt2Number(3) == 3
        assert Sqrt2Number(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(Sqrt2Number(3)) == hash(3) == hash(Fraction(3))
        assert 1 - Sqrt2Number(0, 1) == Sqrt2Number(1, -1)
        assert 2 / Sqrt2Number(0, 1) == Sqrt2Number(0, 1)

    def test_text_form(self):
        assert str(Sqrt2Number(0)) == "0"
        assert str(Sqrt2Number(Fraction(1, 2), -3)) == "1/2-3*s2"
        assert str(Sqrt2Number(0, 1)) == "1*s2"
        assert Sqrt2Number.parse("s2") == Sqrt2Number(0, 1)
        assert Sqrt2Number.parse("-s2") == Sqrt2Number(0, -1)
        assert Sqrt2Number.parse("1/2-3*s2") == Sqrt2Number(Fraction(1, 2), -3)
        assert Sqrt2Number.parse("-1/2") == Sqrt2Number(Fraction(-1, 2))

    @pytest.mark.parametrize("text", ["", "1/2+", "s3", "*s2", "1/0"])
    def test_malformed_text(self, text):
        with pytest.raises(ParseError):
            Sqrt2Number.parse(text)

    @given(sqrt2_numbers)
    def test_text_round_trip(self, z):
        assert Sqrt2Number.parse(str(z)) == z

    @given(sqrt2_numbers, sqrt2_numbers, sqrt2_numbers)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(sqrt2_numbers, nonzero_sqrt2)
    def test_division_inverts_multiplication(self, a, b):
        assert (a / b) * b == a
        assert b * b.inverse() == 1


class TestHalfInt:
    def test_parse(self):
        assert HalfInt.parse("3/2").twice == 3
        assert HalfInt.parse("2").twice == 4
        assert HalfInt.parse("4/2") == 2
        with pytest.raises(ParseError):
            HalfInt.parse("1/3")

    def test_arithmetic_and_order(self):
        half = HalfInt(1)
        assert half + half == 1
        assert HalfInt(3) - half == 1
        assert -half == HalfInt(-1)
        assert half * 3 == HalfInt(3)
        assert HalfInt(1) < HalfInt(2) <= 1
        assert str(HalfInt(3)) == "3/2"
        assert not HalfInt(3).is_integer()
        assert HalfInt(4).as_int() == 2

    def test_two_pow(self):
        assert two_pow(HalfInt(0)) == 1
        assert two_pow(HalfInt(1)) == Sqrt2Number(0, 1)
        assert two_pow(HalfInt(3)) == Sqrt2Number(0, 2)
        assert two_pow(HalfInt(-2)) == Fraction(1, 2)
        assert two_pow(HalfInt(-1)) * two_pow(HalfInt(1)) == 1
