from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling

from algebra.combinatorics import (
    bell_closed_form_14,
    bell_closed_form_14_rearranged,
    bell_closed_form_15,
    bell_closed_form_17,
    bell_partial,
    bell_scaling_check,
    degenerate_falling,
    degenerate_unit_args,
    falling_args,
    falling_factorial,
    gen_binomial,
    stirling2,
    stirling_table,
)
from algebra.partitions import bell_partial_bruteforce, bell_partial_setpartitions, count_set_partitions
from algebra.polyring import L, X
from errors import InsufficientArgumentsError

lambdas = st.fractions(min_value=-3, max_value=3, max_denominator=7)
nonzero_lambdas = lambdas.filter(lambda v: v != 0)


@st.composite
def bell_indices(draw, n_max=7):
    n = draw(st.integers(1, n_max))
    k = draw(st.integers(1, n))
    return n, k


class TestFactorials:
    def test_falling_factorial(self):
        assert falling_factorial(5, 2) == 20
        assert falling_factorial(5, 0) == 1
        assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
        assert falling_factorial(X, 2) == X ** 2 - X

    def test_generalized_binomial(self):
        assert gen_binomial(5, 2) == 10
        assert gen_binomial(Fraction(-1), 3) == -1
        assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_degenerate_falling(self):
        assert degenerate_falling(0) == 1
        assert degenerate_falling(2) == X ** 2 - X * L
        assert degenerate_falling(2, X + 1) == (X + 1) * (X + 1 - L)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            falling_factorial(3, -1)
        with pytest.raises(ValueError):
            gen_binomial(3, -1)


class TestStirling:
    @pytest.mark.parametrize("n, k, expected", [
        (0, 0, 1),
        (3, 0, 0),
        (2, 5, 0),
        (4, 2, 7),
        (5, 3, 25),
        (10, 5, 42525),
    ])
    def test_known_values(self, n, k, expected):
        assert stirling2(n, k) == expected

    def test_against_sympy(self):
        for n in range(13):
            for k in range(n + 1):
                assert stirling2(n, k) == int(stirling(n, k))

    def test_against_enumeration(self):
        for n in range(7):
            for k in range(n + 1):
                assert stirling2(n, k) == count_set_partitions(n, k)

    def test_table_bounds(self):
        table = stirling_table(5)
        assert table.get(5, 7) == 0
        with pytest.raises(IndexError):
            table.get(6, 1)
        with pytest.raises(ValueError):
            stirling2(-1, 0)


class TestBellPartial:
    def test_small_case(self):
        x1, x2, x3 = 2, 3, 5
        assert bell_partial(4, 2, [x1, x2, x3]) == 4 * x1 * x3 + 3 * x2 ** 2
        assert bell_partial(0, 0, []) == 1
        assert bell_partial(3, 0, [1, 1, 1, 1]) == 0

    def test_symbolic_arguments(self):
        assert bell_partial(3, 3, [X]) == X ** 3
        assert bell_partial(3, 1, [X, L, X * L]) == X * L

    def test_ones_give_stirling(self):
        for n in range(1, 10):
            for k in range(1, n + 1):
                assert bell_partial(n, k, [1] * (n - k + 1)) == stirling2(n, k)

    def test_insufficient_arguments(self):
        with pytest.raises(InsufficientArgumentsError):
            bell_partial(4, 2, [1, 1])
        with pytest.raises(ValueError):
            bell_partial(2, 3, [1, 1])

    @settings(max_examples=40, deadline=None)
    @given(bell_indices(n_max=6), st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5),
                                           min_size=6, max_size=6))
    def test_recurrence_matches_partition_sums(self, nk, xs):
        n, k = nk
        expected = bell_partial(n, k, xs)
        assert bell_partial_bruteforce(n, k, xs) == expected
        assert bell_partial_setpartitions(n, k, xs) == expected

    @given(bell_indices(), st.integers(-3, 3), lambdas)
    def test_scaling(self, nk, a, b):
        n, k = nk
        assert bell_scaling_check(a, b, n, k, [1, 2, 3, 4, 5, 6, 7])


class TestClosedForms:
    def test_lambda_zero_gives_stirling(self):
        assert bell_closed_form_14(4, 2, 0) == 7
        assert bell_closed_form_14(5, 3, 0) == 25

    def test_argument_builders(self):
        assert degenerate_unit_args(3, Fraction(1, 2)) == [1, Fraction(1, 2), 0]
        assert falling_args(2, Fraction(1, 2)) == [Fraction(1, 2), Fraction(-1, 4)]

    @given(bell_indices(), lambdas)
    def test_form_14_matches_recurrence(self, nk, lam):
        n, k = nk
        assert bell_closed_form_14(n, k, lam) == bell_partial(n, k, degenerate_unit_args(n - k + 1, lam))

    @given(bell_indices(), nonzero_lambdas)
    def test_form_14_rearranged(self, nk, lam):
        n, k = nk
        assert bell_closed_form_14_rearranged(n, k, lam) == bell_closed_form_14(n, k, lam)

    @given(bell_indices(), lambdas)
    def test_forms_15_and_17_match_recurrence(self, nk, lam):
        n, k = nk
        expected = bell_partial(n, k, falling_args(n - k + 1, lam))
        assert bell_closed_form_15(n, k, lam) == expected
        assert bell_closed_form_17(n, k, lam) == expected

    def test_index_checks(self):
        with pytest.raises(ValueError):
            bell_closed_form_15(3, 0, 1)
        with pytest.raises(ValueError):
            bell_closed_form_14_rearranged(3, 2, 0)
