"""
Truncated Power Series
======================
Exact power series in t truncated at a fixed order N, with BiPoly
coefficients. Coefficients are kept "ordinary" (c_n of sum c_n t^n);
``coeff_exp`` returns the exponential-generating-function coefficient n! c_n.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Iterable, Tuple, Union

from algebra.numeric import Sqrt2Number
from algebra.polyring import BiPoly
from config import Config
from errors import NonInvertibleError, NonZeroLeadingError, SeriesOrderError

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction, Sqrt2Number, BiPoly]


class TruncSeries:
    """sum_{n=0}^{N} c_n t^n; arithmetic never touches indices beyond N"""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable[Coefficient], order: int = None):
        cs = [BiPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise SeriesOrderError(f"series order must be >= 0, got {order}")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(BiPoly.zero() for _ in range(order + 1 - len(cs)))
        self._order = order
        self._coeffs: Tuple[BiPoly, ...] = tuple(cs)

    # constructors
    @classmethod
    def zero(cls, order: int = None) -> "TruncSeries":
        return cls([], _default_order(order))

    @classmethod
    def one(cls, order: int = None) -> "TruncSeries":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c: Coefficient, order: int = None) -> "TruncSeries":
        return cls([c], _default_order(order))

    @classmethod
    def t(cls, order: int = None) -> "TruncSeries":
        return cls([0, 1], _default_order(order))

    @classmethod
    def from_exp_coeffs(cls, values: Iterable[Coefficient], order: int = None) -> "TruncSeries":
        """Series whose n! c_n are the given values"""
        values = [BiPoly.coerce(v) for v in values]
        return cls([v / math.factorial(n) for n, v in enumerate(values)], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[BiPoly, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> BiPoly:
        return self._coeffs[n]

    # ---------------------------------------------------------------
    # arithmetic
    # ---------------------------------------------------------------
    def _match(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other._order != self._order:
                raise SeriesOrderError(
                    f"order mismatch: {self._order} vs {other._order}"
                )
            return other
        if isinstance(other, (int, Fraction, Sqrt2Number, BiPoly)):
            return TruncSeries.constant(other, self._order)
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return other
        return TruncSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self._order)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return other
        return TruncSeries([a - b for a, b in zip(self._coeffs, other._coeffs)], self._order)

    def __rsub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Coefficient) -> "TruncSeries":
        return TruncSeries([v * c for v in self._coeffs], self._order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Sqrt2Number, BiPoly)):
            return self.scale(other)
        other = self._match(other)
        if other is NotImplemented:
            return other
        n_max = self._order
        f, g = self._coeffs, other._coeffs
        # skip zero coefficients, which are common in low orders
        f_nz = [i for i in range(n_max + 1) if f[i]]
        g_nz = [j for j in range(n_max + 1) if g[j]]
        out = [BiPoly.zero()] * (n_max + 1)
        for i in f_nz:
            for j in g_nz:
                if i + j > n_max:
                    break
                out[i + j] = out[i + j] + f[i] * g[j]
        return TruncSeries(out, n_max)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """g with f g = 1 + O(t^{N+1}); g_n = -c_0^{-1} sum_{i=1}^{n} f_i g_{n-i}"""
        c0 = self._coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise NonInvertibleError(
                f"constant term {c0} is not an invertible constant", coefficient=str(c0)
            )
        inv_c0 = Sqrt2Number(1) / c0.constant_value()
        g = [BiPoly.constant(inv_c0)]
        for n in range(1, self._order + 1):
            acc = BiPoly.zero()
            for i in range(1, n + 1):
                if self._coeffs[i]:
                    acc = acc + self._coeffs[i] * g[n - i]
            g.append(acc.scale(-inv_c0))
        return TruncSeries(g, self._order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Sqrt2Number)):
            return self.scale(Sqrt2Number(1) / Sqrt2Number.coerce(other))
        if isinstance(other, TruncSeries):
            return self * self._match(other).inverse()
        return NotImplemented

    def power(self, m: int) -> "TruncSeries":
        """f^m by repeated squaring; f^0 = 1"""
        if m < 0:
            raise ValueError(f"series power needs m >= 0, got {m}")
        result = TruncSeries.one(self._order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __pow__(self, m: int) -> "TruncSeries":
        if not isinstance(m, int):
            return NotImplemented
        return self.power(m)

    # ---------------------------------------------------------------
    # t-power shifts and coefficient access
    # ---------------------------------------------------------------
    def shift_div_t(self, m: int) -> "TruncSeries":
        """f / t^m; the first m coefficients must vanish; the order drops to N - m"""
        if m < 0:
            raise ValueError(f"shift needs m >= 0, got {m}")
        if m > self._order:
            raise SeriesOrderError(f"cannot divide an order-{self._order} series by t^{m}")
        for i in range(m):
            if self._coeffs[i]:
                raise NonZeroLeadingError(
                    f"coefficient of t^{i} is {self._coeffs[i]}, cannot divide by t^{m}", index=i
                )
        return TruncSeries(self._coeffs[m:], self._order - m)

    def mul_t(self, m: int) -> "TruncSeries":
        """t^m f, truncated at the same order"""
        if m < 0:
            raise ValueError(f"shift needs m >= 0, got {m}")
        return TruncSeries([BiPoly.zero()] * m + list(self._coeffs), self._order)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self._order:
            raise SeriesOrderError(f"cannot raise order {self._order} to {order}")
        return TruncSeries(self._coeffs[: order + 1], order)

    def map_coeffs(self, fn: Callable[[BiPoly], BiPoly]) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self._coeffs], self._order)

    def coeff_exp(self, n: int) -> BiPoly:
        """n! c_n"""
        if not 0 <= n <= self._order:
            raise SeriesOrderError(f"index {n} outside 0..{self._order}")
        return self._coeffs[n] * math.factorial(n)

    def exp_coeffs(self) -> Tuple[BiPoly, ...]:
        return tuple(self.coeff_exp(n) for n in range(self._order + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        shown = " + ".join(f"({c})t^{n}" for n, c in enumerate(self._coeffs) if c) or "0"
        return f"TruncSeries({shown} + O(t^{self._order + 1}))"


def _default_order(order: int = None) -> int:
    return Config.SERIES_ORDER if order is None else order


def degenerate_exp(y: Coefficient, order: int = None) -> TruncSeries:
    """(1 + L t)^{y/L}: n! c_n = y (y - L) ... (y - (n-1) L)"""
    order = _default_order(order)
    y = BiPoly.coerce(y)
    lam = BiPoly.lam()
    coeffs = []
    falling = BiPoly.one()
    for n in range(order + 1):
        coeffs.append(falling / math.factorial(n))
        falling = falling * (y - lam * n)
    return TruncSeries(coeffs, order)


def classical_exp(y: Coefficient, order: int = None) -> TruncSeries:
    """e^{y t}: n! c_n = y^n"""
    order = _default_order(order)
    y = BiPoly.coerce(y)
    coeffs = []
    power = BiPoly.one()
    for n in range(order + 1):
        coeffs.append(power / math.factorial(n))
        power = power * y
    return TruncSeries(coeffs, order)
