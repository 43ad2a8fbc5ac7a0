"""
Combinatorial Building Blocks
=============================
Factorials, falling factorials (plain and degenerate), generalized binomial
coefficients, Stirling numbers of the second kind and partial Bell
polynomials with their closed forms.

Functions that take a "ring element" work uniformly over int, Fraction,
Sqrt2Number and BiPoly.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Sequence, Tuple

from algebra.numeric import RationalLike, Sqrt2Number, to_rational
from algebra.polyring import BiPoly
from errors import InsufficientArgumentsError

logger = logging.getLogger(__name__)

Ring = Any


def factorial(n: int) -> int:
    return math.factorial(n)


def _one_like(z: Ring) -> Ring:
    if isinstance(z, BiPoly):
        return BiPoly.one()
    if isinstance(z, Sqrt2Number):
        return Sqrt2Number(1)
    if isinstance(z, Fraction):
        return Fraction(1)
    return 1


def _zero_like(xs: Sequence[Ring]) -> Ring:
    return xs[0] * 0 if xs else 0


def falling_factorial(z: Ring, n: int) -> Ring:
    """<z>_n = z (z-1) ... (z-n+1), with <z>_0 = 1"""
    if n < 0:
        raise ValueError(f"falling factorial needs n >= 0, got {n}")
    result = _one_like(z)
    for k in range(n):
        result = result * (z - k)
    return result


def gen_binomial(z: Ring, m: int) -> Ring:
    """C(z, m) = <z>_m / m! for a nonnegative integer lower index"""
    if m < 0:
        raise ValueError(f"lower index must be >= 0, got {m}")
    ff = falling_factorial(z, m)
    if isinstance(ff, int):
        return ff // factorial(m)
    return ff / factorial(m)


def degenerate_falling(n: int, y: BiPoly = None) -> BiPoly:
    """(y)_{n,L} = y (y - L) ... (y - (n-1) L); y defaults to X"""
    if n < 0:
        raise ValueError(f"degenerate falling factorial needs n >= 0, got {n}")
    y = BiPoly.x() if y is None else BiPoly.coerce(y)
    lam = BiPoly.lam()
    result = BiPoly.one()
    for l in range(n):
        result = result * (y - lam * l)
    return result


# ===================================================================
# Stirling numbers of the second kind
# ===================================================================
@dataclass(frozen=True)
class StirlingTable:
    max_n: int
    values: Tuple[Tuple[int, ...], ...]

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(f"Stirling indices must be nonnegative, got ({n}, {k})")
        if n > self.max_n:
            raise IndexError(f"n={n} exceeds table size {self.max_n}")
        if k > n:
            return 0
        return self.values[n][k]


@lru_cache(maxsize=32)
def stirling_table(max_n: int) -> StirlingTable:
    """Triangle S(n, k) for 0 <= k <= n <= max_n via S(n,k) = k S(n-1,k) + S(n-1,k-1)"""
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            above = prev[k] if k < len(prev) else 0
            row[k] = k * above + prev[k - 1]
        rows.append(tuple(row))
    logger.debug(f"🔢 Stirling table built up to n={max_n}")
    return StirlingTable(max_n=max_n, values=tuple(rows))


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"Stirling indices must be nonnegative, got ({n}, {k})")
    if k > n:
        return 0
    # small requests share one table
    return stirling_table(max(n, 16)).get(n, k)


# ===================================================================
# Partial Bell polynomials
# ===================================================================
def _check_bell_indices(n: int, k: int, xs: Sequence[Ring]) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"partial Bell polynomial needs 0 <= k <= n, got n={n}, k={k}")
    if k >= 1 and len(xs) < n - k + 1:
        raise InsufficientArgumentsError(
            f"B_{{{n},{k}}} needs {n - k + 1} arguments, got {len(xs)}"
        )


def bell_partial(n: int, k: int, args: Sequence[Ring]) -> Ring:
    """B_{n,k}(x_1, ..., x_{n-k+1}) by the convolution recurrence

    B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1},  B_{0,0} = 1, B_{n,0} = 0 (n > 0)
    """
    xs = list(args)
    _check_bell_indices(n, k, xs)
    zero = _zero_like(xs)
    one = zero + 1
    memo: Dict[Tuple[int, int], Ring] = {}

    def b(m: int, j: int) -> Ring:
        key = (m, j)
        if key in memo:
            return memo[key]
        if j == 0:
            value = one if m == 0 else zero
        elif m < j:
            value = zero
        else:
            value = zero
            for i in range(1, m - j + 2):
                value = value + math.comb(m - 1, i - 1) * xs[i - 1] * b(m - i, j - 1)
        memo[key] = value
        return value

    return b(n, k)


def bell_scaling_check(a, b, n: int, k: int, args: Sequence[Ring]) -> bool:
    """B_{n,k}(a b x_1, a b^2 x_2, ...) == a^k b^n B_{n,k}(x_1, x_2, ...)"""
    xs = list(args)[: max(n - k + 1, 0)]
    scaled = [a * (b ** (i + 1)) * x for i, x in enumerate(xs)]
    lhs = bell_partial(n, k, scaled)
    rhs = (a ** k) * (b ** n) * bell_partial(n, k, xs)
    return lhs == rhs


def _check_closed_form_indices(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"closed form needs 1 <= k <= n, got n={n}, k={k}")


def bell_closed_form_14(n: int, k: int, lam: RationalLike) -> Fraction:
    """B_{n,k}(1, 1-l, (1-l)(1-2l), ...) as ((-1)^k / k!) sum_l (-1)^l C(k,l) prod_q (l - q lam)"""
    _check_closed_form_indices(n, k)
    lam = to_rational(lam)
    total = Fraction(0)
    for l in range(k + 1):
        prod = Fraction(1)
        for q in range(n):
            prod *= l - q * lam
        total += (-1) ** l * math.comb(k, l) * prod
    return (-1) ** k * total / factorial(k)


def bell_closed_form_14_rearranged(n: int, k: int, lam: RationalLike) -> Fraction:
    """Same value as :func:`bell_closed_form_14` for lam != 0:

    (-1)^k lam^{n-1} (n-1)!/k! sum_{l=1}^k (-1)^l l C(k,l) C(l/lam - 1, n-1)
    """
    _check_closed_form_indices(n, k)
    lam = to_rational(lam)
    if lam == 0:
        raise ValueError("rearranged closed form needs lam != 0")
    total = Fraction(0)
    for l in range(1, k + 1):
        total += (-1) ** l * l * math.comb(k, l) * gen_binomial(Fraction(l) / lam - 1, n - 1)
    return (-1) ** k * lam ** (n - 1) * factorial(n - 1) * total / factorial(k)


def bell_closed_form_15(n: int, k: int, lam: RationalLike) -> Fraction:
    """B_{n,k}(<lam>_1, ..., <lam>_{n-k+1}) = ((-1)^k / k!) sum_l (-1)^l C(k,l) <lam l>_n"""
    _check_closed_form_indices(n, k)
    lam = to_rational(lam)
    total = Fraction(0)
    for l in range(k + 1):
        total += (-1) ** l * math.comb(k, l) * falling_factorial(lam * l, n)
    return (-1) ** k * total / factorial(k)


def bell_closed_form_17(n: int, k: int, lam: RationalLike) -> Fraction:
    """B_{n,k}(<lam>_1, ...) = (-1)^k lam (n-1)!/k! sum_{l=1}^k (-1)^l l C(k,l) C(lam l - 1, n-1)"""
    _check_closed_form_indices(n, k)
    lam = to_rational(lam)
    total = Fraction(0)
    for l in range(1, k + 1):
        total += (-1) ** l * l * math.comb(k, l) * gen_binomial(lam * l - 1, n - 1)
    return (-1) ** k * lam * factorial(n - 1) * total / factorial(k)


def degenerate_unit_args(m: int, lam: RationalLike) -> list:
    """[x_1..x_m] with x_j = prod_{l<j} (1 - l lam), the arguments of the Eq. 14 closed form"""
    lam = to_rational(lam)
    xs = []
    value = Fraction(1)
    for j in range(m):
        xs.append(value)
        value *= 1 - (j + 1) * lam
    return xs


def falling_args(m: int, lam: RationalLike) -> list:
    """[<lam>_1, ..., <lam>_m]"""
    lam = to_rational(lam)
    return [falling_factorial(lam, j) for j in range(1, m + 1)]
