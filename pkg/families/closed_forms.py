"""
Closed Forms for Degenerate Fubini-Type Numbers
===============================================
a_n^{(alpha)}(lambda) at a rational lambda != 0, from Faa di Bruno's formula
composed with the closed form of B_{n,k}(1, 1 - lambda, (1 - lambda)(1 - 2 lambda), ...).

``verbatim=True`` evaluates the formula in its commonly printed shape
(2^{alpha+k} denominator, lambda^{k-1} divisor, C(lambda l - 1, n - 1)). That
shape does not agree with the generating function; it is kept so the
disagreement stays checkable.
"""

import logging
import math
from fractions import Fraction

from algebra.combinatorics import falling_factorial, gen_binomial
from algebra.numeric import HalfInt, RationalLike, Sqrt2Number, to_rational, two_pow
from errors import FamilyDomainError

logger = logging.getLogger(__name__)


def _check(alpha, n: int, lam: RationalLike):
    alpha = HalfInt.of(alpha)
    if not alpha.is_nonnegative():
        raise FamilyDomainError(f"order must be >= 0, got {alpha}")
    if n < 1:
        raise FamilyDomainError(f"closed form needs n >= 1, got {n}")
    lam = to_rational(lam)
    if lam == 0:
        raise FamilyDomainError("closed form needs lambda != 0; use the series table for lambda = 0")
    return alpha, lam


def _inner_sum(k: int, n: int, top) -> Fraction:
    """sum_{l=1}^{k} (-1)^l l C(k,l) C(top(l), n-1)"""
    total = Fraction(0)
    for l in range(1, k + 1):
        total += (-1) ** l * l * math.comb(k, l) * gen_binomial(top(l), n - 1)
    return total


def _corrected(alpha: HalfInt, n: int, lam: Fraction) -> Sqrt2Number:
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(falling_factorial(-alpha.twice, k), math.factorial(k)) * _inner_sum(
            k, n, lambda l: Fraction(l) / lam - 1
        )
    return two_pow(alpha) * (math.factorial(n - 1) * lam ** (n - 1) * total)


def _printed(alpha: HalfInt, n: int, lam: Fraction, power_shift) -> Sqrt2Number:
    """(n-1)! sum_k <-2 alpha>_k / 2^{power_shift(k)} (-1)^k / (lam^{k-1} k!) inner(k)"""
    total = Sqrt2Number(0)
    for k in range(1, n + 1):
        rational_part = (
            Fraction(falling_factorial(-alpha.twice, k) * (-1) ** k, math.factorial(k))
            / lam ** (k - 1)
            * _inner_sum(k, n, lambda l: lam * l - 1)
        )
        total = total + two_pow(power_shift(k)).inverse() * rational_part
    return total * math.factorial(n - 1)


def fubini_numbers_closed_form(alpha, n: int, lam: RationalLike, verbatim: bool = False) -> Sqrt2Number:
    """a_n^{(alpha)}(lambda) for n >= 1 and rational lambda != 0

    2^alpha (n-1)! lambda^{n-1} sum_{k=1}^{n} <-2 alpha>_k / k! sum_{l=1}^{k} (-1)^l l C(k,l) C(l/lambda - 1, n-1)
    """
    alpha, lam = _check(alpha, n, lam)
    if verbatim:
        return _printed(alpha, n, lam, lambda k: alpha + k)
    return _corrected(alpha, n, lam)


def euler_numbers_closed_form(alpha, n: int, lam: RationalLike, verbatim: bool = False) -> Sqrt2Number:
    """E_n^{(2 alpha)}(0; lambda; -1/2) = 2^{3 alpha} a_n^{(alpha)}(lambda)"""
    alpha, lam = _check(alpha, n, lam)
    if verbatim:
        return _printed(alpha, n, lam, lambda k: HalfInt.of(k) - alpha * 2)
    return two_pow(alpha * 3) * _corrected(alpha, n, lam)
