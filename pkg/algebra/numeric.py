"""
Exact Numeric Types
===================
Rationals (``fractions.Fraction``), the quadratic field Q(sqrt 2) and
half-integer orders.

Every value is immutable; every operation is pure.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

from errors import InvalidOperandError, ParseError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_TERM_RE = re.compile(r"[+-]?[^+-]+")


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def format_rational(value: RationalLike) -> str:
    """'p/q', with the denominator omitted when it is 1"""
    return str(to_rational(value))


def parse_rational(text: str) -> Fraction:
    cleaned = text.strip() if isinstance(text, str) else ""
    if not _RATIONAL_RE.match(cleaned):
        raise ParseError(f"malformed rational: {text!r}")
    num, _, den = cleaned.partition("/")
    den_value = int(den) if den else 1
    if den_value == 0:
        raise ParseError(f"zero denominator in rational: {text!r}")
    return Fraction(int(num), den_value)


class Sqrt2Number:
    """An element a + b*sqrt(2) of Q(sqrt 2) with rational a, b"""

    __slots__ = ("_a", "_b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        self._a = to_rational(a)
        self._b = to_rational(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value) -> "Sqrt2Number":
        if isinstance(value, Sqrt2Number):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {type(value).__name__} as an element of Q(sqrt 2)")

    @classmethod
    def sqrt2(cls) -> "Sqrt2Number":
        return cls(0, 1)

    # ---------------------------------------------------------------
    # field operations
    # ---------------------------------------------------------------
    @staticmethod
    def _other(value):
        if isinstance(value, Sqrt2Number):
            return value
        if isinstance(value, (int, Fraction)):
            return Sqrt2Number(value, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Sqrt2Number(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Sqrt2Number(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "Sqrt2Number":
        return Sqrt2Number(-self._a, -self._b)

    def __pos__(self) -> "Sqrt2Number":
        return self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._a, self._b, other._a, other._b
        if not b and not d:
            return Sqrt2Number(a * c, 0)
        # (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s
        return Sqrt2Number(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "Sqrt2Number":
        return Sqrt2Number(self._a, -self._b)

    def norm(self) -> Fraction:
        """a^2 - 2 b^2; zero only for the zero element"""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> "Sqrt2Number":
        if self.is_zero():
            raise InvalidOperandError("division by zero in Q(sqrt 2)")
        n = self.norm()
        return Sqrt2Number(self._a / n, -self._b / n)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not other._b:
            if not other._a:
                raise InvalidOperandError("division by zero in Q(sqrt 2)")
            return Sqrt2Number(self._a / other._a, self._b / other._a)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "Sqrt2Number":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Sqrt2Number(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---------------------------------------------------------------
    # predicates, comparison, hashing
    # ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._a and not self._b

    def is_rational(self) -> bool:
        return not self._b

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        # equal rationals must hash alike
        if not self._b:
            return hash(self._a)
        return hash((self._a, self._b))

    # ---------------------------------------------------------------
    # text form: "p/q+r/s*s2", zero components omitted
    # ---------------------------------------------------------------
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self._a:
            parts.append(format_rational(self._a))
        if self._b:
            coeff = format_rational(self._b)
            if parts and self._b > 0:
                coeff = "+" + coeff
            parts.append(f"{coeff}*s2")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Sqrt2Number('{self}')"

    @classmethod
    def parse(cls, text: str) -> "Sqrt2Number":
        if not isinstance(text, str):
            raise ParseError(f"expected text, got {type(text).__name__}")
        cleaned = text.replace(" ", "")
        terms = _TERM_RE.findall(cleaned)
        if not cleaned or "".join(terms) != cleaned:
            raise ParseError(f"malformed sqrt2 number: {text!r}")
        a = Fraction(0)
        b = Fraction(0)
        for term in terms:
            if term.endswith("s2"):
                coeff = term[:-2]
                if coeff.endswith("*"):
                    coeff = coeff[:-1]
                    if coeff in ("", "+", "-"):
                        raise ParseError(f"missing coefficient before '*s2' in {text!r}")
                if coeff in ("", "+"):
                    b += 1
                elif coeff == "-":
                    b -= 1
                else:
                    b += parse_rational(coeff)
            else:
                a += parse_rational(term)
        return cls(a, b)


Sqrt2Like = Union[int, Fraction, Sqrt2Number]


@total_ordering
class HalfInt:
    """An exact half-integer order; stores twice its value"""

    __slots__ = ("_twice",)

    def __init__(self, twice: int):
        if isinstance(twice, bool) or not isinstance(twice, int):
            raise TypeError("HalfInt stores twice its value as an int")
        self._twice = twice

    @property
    def twice(self) -> int:
        return self._twice

    @property
    def value(self) -> Fraction:
        return Fraction(self._twice, 2)

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        q = to_rational(value)
        if q.denominator not in (1, 2):
            raise ParseError(f"order must be an integer or a half-integer, got {q}")
        return cls(int(2 * q))

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        q = parse_rational(text)
        if q.denominator not in (1, 2):
            raise ParseError(f"order must be an integer or 'p/2', got {text!r}")
        return cls(int(2 * q))

    def is_integer(self) -> bool:
        return self._twice % 2 == 0

    def is_nonnegative(self) -> bool:
        return self._twice >= 0

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self._twice // 2

    def _coerce(self, other):
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, (int, Fraction)):
            q = to_rational(other)
            if q.denominator in (1, 2):
                return HalfInt(int(2 * q))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self._twice + other._twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self._twice - other._twice)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(other._twice - self._twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self._twice)

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return HalfInt(self._twice * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, HalfInt):
            return self._twice == other._twice
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, HalfInt):
            return self._twice < other._twice
        if isinstance(other, (int, Fraction)):
            return self.value < other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return format_rational(self.value)

    def __repr__(self) -> str:
        return f"HalfInt('{self}')"


def two_pow(alpha: HalfInt) -> Sqrt2Number:
    """2**alpha for a half-integer alpha, exactly, as (sqrt 2)**(2 alpha)"""
    alpha = HalfInt.of(alpha)
    q, r = divmod(alpha.twice, 2)
    scale = Fraction(2) ** q
    if r:
        return Sqrt2Number(0, scale)
    return Sqrt2Number(scale, 0)
