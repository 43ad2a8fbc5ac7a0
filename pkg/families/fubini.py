"""
Fubini-Type Families
====================
Degenerate Fubini-type polynomials a_n^{(alpha)}(x; lambda), their lambda -> 0
limits a_n^{(alpha)}(x), and the explicit Stirling-number formulas for them.

Generating function:

    2^alpha / (2 - e_L(t))^{2 alpha} * e_L(t)^X = sum_n a_n^{(alpha)}(X; L) t^n / n!

where e_L(t) = (1 + L t)^{1/L}. Orders alpha are nonnegative half-integers, so
2^alpha lives in Q(sqrt 2) and 2 alpha is a whole exponent.
"""

import logging
import math
from functools import lru_cache

from algebra.combinatorics import falling_factorial, stirling2
from algebra.numeric import HalfInt, Sqrt2Number, two_pow
from algebra.polyring import BiPoly
from algebra.series import degenerate_exp
from errors import FamilyDomainError
from families.tables import Family, FamilyTable
from verification.report import IdentityReport, evaluate_point

logger = logging.getLogger(__name__)


def _order(alpha) -> HalfInt:
    alpha = HalfInt.of(alpha)
    if not alpha.is_nonnegative():
        raise FamilyDomainError(f"Fubini-type order must be >= 0, got {alpha}")
    return alpha


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise FamilyDomainError(f"n_max must be >= 0, got {n_max}")


@lru_cache(maxsize=64)
def _degenerate_fubini(alpha: HalfInt, n_max: int) -> FamilyTable:
    base = 2 - degenerate_exp(1, n_max)
    series = base.inverse().power(alpha.twice).scale(two_pow(alpha)) * degenerate_exp(BiPoly.x(), n_max)
    logger.info(f"📐 degenerate Fubini table built: alpha={alpha}, n_max={n_max}")
    return FamilyTable(Family.DEG_FUBINI, alpha, n_max, series.exp_coeffs())


def degenerate_fubini(alpha, n_max: int) -> FamilyTable:
    """a_n^{(alpha)}(X; L) for n = 0..n_max from the generating function"""
    alpha = _order(alpha)
    _check_n_max(n_max)
    return _degenerate_fubini(alpha, n_max)


@lru_cache(maxsize=64)
def _fubini_type(alpha: HalfInt, n_max: int) -> FamilyTable:
    table = _degenerate_fubini(alpha, n_max)
    return FamilyTable(Family.FUBINI, alpha, n_max, tuple(v.set_lambda_zero() for v in table.values))


def fubini_type(alpha, n_max: int) -> FamilyTable:
    """a_n^{(alpha)}(X), the lambda -> 0 limit; polynomials in X only"""
    alpha = _order(alpha)
    _check_n_max(n_max)
    return _fubini_type(alpha, n_max)


def degenerate_fubini_numbers(alpha, n_max: int) -> tuple:
    """a_n^{(alpha)}(L) = a_n^{(alpha)}(0; L), polynomials in L"""
    zero = BiPoly.zero()
    return tuple(v.substitute_x(zero) for v in degenerate_fubini(alpha, n_max).values)


# ===================================================================
# Explicit formulas
# ===================================================================
def _stirling_weight(alpha: HalfInt, k: int):
    """sum_{i=0}^{k} <-2 alpha>_i (-1)^i S(k, i); a rising factorial of 2 alpha in disguise"""
    minus_two_alpha = -alpha.twice
    return sum(falling_factorial(minus_two_alpha, i) * (-1) ** i * stirling2(k, i) for i in range(k + 1))


def fubini_explicit_thm2(alpha, n: int) -> BiPoly:
    """a_n^{(alpha)}(X) = 2^alpha sum_k C(n,k) sum_i <-2 alpha>_i (-1)^i S(k,i) X^{n-k}"""
    alpha = _order(alpha)
    if n < 0:
        raise FamilyDomainError(f"index must be >= 0, got {n}")
    scale = two_pow(alpha)
    result = BiPoly.zero()
    for k in range(n + 1):
        weight = math.comb(n, k) * _stirling_weight(alpha, k)
        if weight:
            result = result + BiPoly.monomial(n - k, 0, scale * weight)
    return result


def fubini_numbers_eq11(alpha, n: int) -> Sqrt2Number:
    """a_n^{(alpha)} = 2^alpha sum_i <-2 alpha>_i (-1)^i S(n,i)"""
    alpha = _order(alpha)
    return two_pow(alpha) * _stirling_weight(alpha, n)


def euler_explicit_eq25(alpha, n: int) -> BiPoly:
    """E_n^{(2 alpha)}(X; -1/2) = 2^{4 alpha} sum_k C(n,k) sum_i <-2 alpha>_i (-1)^i S(k,i) X^{n-k}"""
    alpha = _order(alpha)
    return fubini_explicit_thm2(alpha, n) * two_pow(alpha * 3)


def stirling_recurrence_lhs(alpha, n: int, values) -> BiPoly:
    """sum_k C(n,k) sum_{i<=n-k} <2 alpha>_i (-1)^i S(n-k,i) values[k]"""
    alpha = _order(alpha)
    total = BiPoly.zero()
    for k in range(n + 1):
        weight = sum(
            falling_factorial(alpha.twice, i) * (-1) ** i * stirling2(n - k, i)
            for i in range(n - k + 1)
        )
        if weight:
            total = total + values[k] * (math.comb(n, k) * weight)
    return total


def fubini_recurrence_check_thm3(alpha, n: int, table: FamilyTable = None) -> IdentityReport:
    """sum_k C(n,k) sum_i <2 alpha>_i (-1)^i S(n-k,i) a_k^{(alpha)}(X) == 2^alpha X^n

    ``table`` is a Fubini-type table covering index n; one is built when omitted.
    """
    alpha = _order(alpha)
    return evaluate_point(
        "thm3", {"alpha": alpha, "n": n},
        lambda: stirling_recurrence_lhs(alpha, n, (table if table is not None else fubini_type(alpha, n)).values),
        lambda: BiPoly.monomial(n, 0, two_pow(alpha)),
    )
