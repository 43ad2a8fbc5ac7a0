from fractions import Fraction

import pytest

from algebra.numeric import HalfInt, Sqrt2Number, two_pow
from algebra.polyring import X
from config import Config
from errors import FamilyDomainError, ParseError
from families.apostol import deg_apostol_euler
from families.catalog import build_table, compute_entry, parse_family, parse_lambda, parse_order
from families.closed_forms import euler_numbers_closed_form, fubini_numbers_closed_form
from families.fubini import degenerate_fubini
from families.tables import Family

LAMBDAS = [Fraction(1), Fraction(1, 2), Fraction(-1, 3), Fraction(2)]


class TestClosedForms:
    def test_known_values(self):
        assert fubini_numbers_closed_form(1, 2, 1) == 12
        assert fubini_numbers_closed_form(1, 2, Fraction(1, 2)) == 14
        assert fubini_numbers_closed_form(Fraction(1, 2), 1, 1) == Sqrt2Number.sqrt2()

    @pytest.mark.parametrize("alpha", [HalfInt(1), HalfInt(2), HalfInt(4)])
    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_matches_generating_function(self, alpha, lam):
        table = degenerate_fubini(alpha, 5)
        for n in range(1, 6):
            assert fubini_numbers_closed_form(alpha, n, lam) == table[n].evaluate(0, lam)

    @pytest.mark.parametrize("alpha", [HalfInt(1), HalfInt(2)])
    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_euler_matches_generating_function(self, alpha, lam):
        table = deg_apostol_euler(alpha.twice, Fraction(-1, 2), 4)
        for n in range(1, 5):
            assert euler_numbers_closed_form(alpha, n, lam) == table[n].evaluate(0, lam)

    def test_printed_shape_disagrees(self):
        assert fubini_numbers_closed_form(1, 1, 1, verbatim=True) == Fraction(-1, 2)
        assert fubini_numbers_closed_form(1, 1, 1) == 4
        assert euler_numbers_closed_form(1, 1, 1, verbatim=True) == -4
        assert euler_numbers_closed_form(1, 1, 1) == 32

    def test_euler_is_scaled_fubini(self):
        for n in range(1, 5):
            assert euler_numbers_closed_form(2, n, Fraction(-1, 3)) == (
                two_pow(HalfInt(12)) * fubini_numbers_closed_form(2, n, Fraction(-1, 3))
            )

    @pytest.mark.parametrize("alpha, n, lam", [(1, 0, 1), (1, 2, 0), (-1, 2, 1)])
    def test_domain(self, alpha, n, lam):
        with pytest.raises(FamilyDomainError):
            fubini_numbers_closed_form(alpha, n, lam)


class TestCatalog:
    def test_parsing(self):
        assert parse_family("deg-fubini") is Family.DEG_FUBINI
        assert parse_order(Family.FUBINI, "3/2") == HalfInt(3)
        assert parse_order(Family.CLASSICAL_EULER, "2") == 2
        assert parse_lambda("symbolic") is None
        assert parse_lambda("-1/3") == Fraction(-1, 3)
        with pytest.raises(ParseError):
            parse_family("nope")
        with pytest.raises(ParseError):
            parse_order(Family.CLASSICAL_EULER, "1/2")
        with pytest.raises(FamilyDomainError):
            parse_order(Family.FUBINI, "-1")

    def test_build_table(self):
        assert build_table("deg-fubini", "1", 3)[0] == 2
        assert build_table("classical-bernoulli", "1", 1)[1] == X - Fraction(1, 2)
        assert build_table("deg-apostol-euler", "1", 1, gamma="1*s2").gamma == Sqrt2Number.sqrt2()
        with pytest.raises(FamilyDomainError):
            build_table("deg-fubini", "1", Config.N_MAX_CEILING + 1)
        with pytest.raises(FamilyDomainError):
            build_table("deg-apostol-euler", "1", 2, gamma="-1")
        with pytest.raises(FamilyDomainError):
            build_table("deg-apostol-bernoulli", "1", 2, gamma="0")

    def test_compute_entry_methods(self):
        assert compute_entry("fubini", "1", 2, method="explicit") == 2 * X ** 2 + 8 * X + 16
        assert compute_entry("fubini", "1", 2) == 2 * X ** 2 + 8 * X + 16
        assert compute_entry("deg-fubini", "1", 1, x=Fraction(1)) == 6
        assert compute_entry("deg-fubini", "1", 2, lam=Fraction(1), x=Fraction(0)) == 12
        assert compute_entry("deg-fubini", "1", 2, lam=Fraction(1), method="closed-form") == 12

    def test_compute_entry_euler_closed_form(self):
        # Euler order 1 pairs with the half order
        value = compute_entry("deg-apostol-euler", "1", 1, gamma="-1/2", lam=Fraction(1), method="closed-form")
        assert value == 4

    def test_compute_entry_verbatim(self):
        value = compute_entry("deg-fubini", "1", 1, lam=Fraction(1), method="closed-form", verbatim=True)
        assert value == Fraction(-1, 2)

    @pytest.mark.parametrize("kwargs", [
        {"family": "deg-fubini", "n": 2, "x": Fraction(1)},
        {"family": "deg-fubini", "n": 2, "method": "closed-form"},
        {"family": "deg-fubini", "n": 2, "lam": Fraction(1), "x": Fraction(1), "method": "closed-form"},
        {"family": "deg-fubini", "n": 2, "method": "explicit"},
        {"family": "deg-fubini", "n": 2, "verbatim": True},
        {"family": "deg-fubini", "n": 2, "method": "magic"},
        {"family": "classical-euler", "n": 2, "lam": Fraction(1), "method": "closed-form"},
        {"family": "deg-apostol-euler", "n": 2, "lam": Fraction(1), "method": "closed-form"},
        {"family": "deg-fubini", "n": -1},
    ])
    def test_compute_entry_rejects(self, kwargs):
        with pytest.raises(FamilyDomainError):
            compute_entry(alpha="1", **kwargs)
