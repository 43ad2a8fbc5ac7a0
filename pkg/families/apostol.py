"""
Apostol-Type Families
=====================
Degenerate Apostol-Bernoulli and Apostol-Euler polynomials of integer order m
with a twisting parameter gamma in Q(sqrt 2):

    (t / (gamma e_L(t) - 1))^m e_L(t)^X      -> B_n^{(m)}(X; L; gamma)
    (2 / (gamma e_L(t) + 1))^m e_L(t)^X      -> E_n^{(m)}(X; L; gamma)

plus the Carlitz (gamma = 1, m = 1) and classical (no lambda at all) special cases.
"""

import logging
from functools import lru_cache
from typing import Union

from algebra.numeric import Sqrt2Number
from algebra.polyring import BiPoly
from algebra.series import TruncSeries, classical_exp, degenerate_exp
from errors import FamilyDomainError
from families.tables import Family, FamilyTable

logger = logging.getLogger(__name__)

GammaLike = Union[int, str, Sqrt2Number]


def coerce_gamma(gamma: GammaLike) -> Sqrt2Number:
    if isinstance(gamma, str):
        return Sqrt2Number.parse(gamma)
    return Sqrt2Number.coerce(gamma)


def _check(m: int, n_max: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise FamilyDomainError(f"Apostol order must be a nonnegative integer, got {m!r}")
    if n_max < 0:
        raise FamilyDomainError(f"n_max must be >= 0, got {n_max}")


def _bernoulli_ratio(exp_series, gamma: Sqrt2Number, n_max: int) -> TruncSeries:
    """t / (gamma e(t) - 1) to order n_max; exp_series(order) builds e(t)"""
    if gamma == 1:
        # the denominator starts at t; divide it out before inverting
        denominator = (exp_series(n_max + 1).scale(gamma) - 1).shift_div_t(1)
        return denominator.inverse()
    return (exp_series(n_max).scale(gamma) - 1).inverse().mul_t(1)


def _euler_ratio(exp_series, gamma: Sqrt2Number, n_max: int) -> TruncSeries:
    return (exp_series(n_max).scale(gamma) + 1).inverse().scale(2)


def _lambda_exp(order: int) -> TruncSeries:
    return degenerate_exp(1, order)


def _plain_exp(order: int) -> TruncSeries:
    return classical_exp(1, order)


@lru_cache(maxsize=64)
def _deg_apostol_bernoulli(m: int, gamma: Sqrt2Number, n_max: int) -> FamilyTable:
    ratio = _bernoulli_ratio(_lambda_exp, gamma, n_max)
    series = ratio.power(m) * degenerate_exp(BiPoly.x(), n_max)
    logger.info(f"📐 degenerate Apostol-Bernoulli table built: m={m}, gamma={gamma}, n_max={n_max}")
    return FamilyTable(Family.DEG_APOSTOL_BERNOULLI, m, n_max, series.exp_coeffs(), gamma=gamma)


def deg_apostol_bernoulli(m: int, gamma: GammaLike, n_max: int) -> FamilyTable:
    """B_n^{(m)}(X; L; gamma) for n = 0..n_max"""
    _check(m, n_max)
    gamma = coerce_gamma(gamma)
    if gamma.is_zero():
        raise FamilyDomainError("degenerate Apostol-Bernoulli polynomials need gamma != 0")
    return _deg_apostol_bernoulli(m, gamma, n_max)


@lru_cache(maxsize=64)
def _deg_apostol_euler(m: int, gamma: Sqrt2Number, n_max: int) -> FamilyTable:
    ratio = _euler_ratio(_lambda_exp, gamma, n_max)
    series = ratio.power(m) * degenerate_exp(BiPoly.x(), n_max)
    logger.info(f"📐 degenerate Apostol-Euler table built: m={m}, gamma={gamma}, n_max={n_max}")
    return FamilyTable(Family.DEG_APOSTOL_EULER, m, n_max, series.exp_coeffs(), gamma=gamma)


def deg_apostol_euler(m: int, gamma: GammaLike, n_max: int) -> FamilyTable:
    """E_n^{(m)}(X; L; gamma) for n = 0..n_max"""
    _check(m, n_max)
    gamma = coerce_gamma(gamma)
    if gamma == -1:
        raise FamilyDomainError("degenerate Apostol-Euler polynomials need gamma != -1")
    return _deg_apostol_euler(m, gamma, n_max)


def carlitz_bernoulli(n_max: int) -> FamilyTable:
    return deg_apostol_bernoulli(1, 1, n_max)


def carlitz_euler(n_max: int) -> FamilyTable:
    return deg_apostol_euler(1, 1, n_max)


# ===================================================================
# Classical families, straight from e^{x t}
# ===================================================================
@lru_cache(maxsize=32)
def classical_bernoulli(n_max: int, m: int = 1) -> FamilyTable:
    """B_n^{(m)}(X) from (t / (e^t - 1))^m e^{X t}"""
    _check(m, n_max)
    series = _bernoulli_ratio(_plain_exp, Sqrt2Number(1), n_max).power(m) * classical_exp(BiPoly.x(), n_max)
    return FamilyTable(Family.CLASSICAL_BERNOULLI, m, n_max, series.exp_coeffs())


@lru_cache(maxsize=32)
def classical_euler(n_max: int, m: int = 1) -> FamilyTable:
    """E_n^{(m)}(X) from (2 / (e^t + 1))^m e^{X t}"""
    _check(m, n_max)
    series = _euler_ratio(_plain_exp, Sqrt2Number(1), n_max).power(m) * classical_exp(BiPoly.x(), n_max)
    return FamilyTable(Family.CLASSICAL_EULER, m, n_max, series.exp_coeffs())
