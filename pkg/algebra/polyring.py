"""
Bivariate Polynomial Ring
=========================
Sparse exact polynomials in Q(sqrt 2)[X, L]. X stands for the argument x of
every polynomial family, L for the degeneracy parameter lambda.
"""

from __future__ import annotations

import json
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from algebra.numeric import Sqrt2Number, format_rational
from errors import ParseError

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction, Sqrt2Number]


class BiPoly:
    """Immutable sparse polynomial: {(degX, degL): coefficient}, no zero coefficients stored"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] = None):
        clean: Dict[Monomial, Sqrt2Number] = {}
        for (dx, dl), coeff in (terms or {}).items():
            if dx < 0 or dl < 0:
                raise ValueError(f"negative exponent in monomial {(dx, dl)}")
            c = Sqrt2Number.coerce(coeff)
            if c:
                clean[(dx, dl)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Sqrt2Number]) -> "BiPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # constructors
    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def lam(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, dx: int, dl: int, c: Scalar = 1) -> "BiPoly":
        return cls({(dx, dl): c})

    @classmethod
    def coerce(cls, value) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        return cls.constant(value)

    # ---------------------------------------------------------------
    # inspection
    # ---------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Sqrt2Number]:
        return MappingProxyType(self._terms)

    def coefficient(self, dx: int, dl: int) -> Sqrt2Number:
        return self._terms.get((dx, dl), Sqrt2Number(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_value(self) -> Sqrt2Number:
        return self.coefficient(0, 0)

    def degree_x(self) -> int:
        """-1 for the zero polynomial"""
        return max((dx for dx, _ in self._terms), default=-1)

    def degree_l(self) -> int:
        return max((dl for _, dl in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ---------------------------------------------------------------
    # ring operations
    # ---------------------------------------------------------------
    @staticmethod
    def _other(value):
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, (int, Fraction, Sqrt2Number)):
            return BiPoly.constant(value)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for m, c in other._terms.items():
            s = result.get(m)
            s = c if s is None else s + c
            if s:
                result[m] = s
            else:
                result.pop(m, None)
        return BiPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "BiPoly":
        return self

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "BiPoly":
        c = Sqrt2Number.coerce(c)
        if not c:
            return BiPoly.zero()
        return BiPoly._from_clean({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Sqrt2Number)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return BiPoly.zero()
        result: Dict[Monomial, Sqrt2Number] = {}
        for (dx1, dl1), c1 in self._terms.items():
            for (dx2, dl2), c2 in other._terms.items():
                m = (dx1 + dx2, dl1 + dl2)
                s = result.get(m)
                result[m] = c1 * c2 if s is None else s + c1 * c2
        return BiPoly._from_clean({m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Sqrt2Number)):
            return self.scale(Sqrt2Number(1) / Sqrt2Number.coerce(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "BiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---------------------------------------------------------------
    # evaluation and substitution
    # ---------------------------------------------------------------
    def evaluate(self, x: Scalar, lam: Scalar) -> Sqrt2Number:
        """Exact value at X := x, L := lam"""
        x = Sqrt2Number.coerce(x)
        lam = Sqrt2Number.coerce(lam)
        total = Sqrt2Number(0)
        for (dx, dl), c in self._terms.items():
            total = total + c * (x ** dx) * (lam ** dl)
        return total

    def _by_x_degree(self) -> Dict[int, "BiPoly"]:
        groups: Dict[int, Dict[Monomial, Sqrt2Number]] = {}
        for (dx, dl), c in self._terms.items():
            groups.setdefault(dx, {})[(0, dl)] = c
        return {d: BiPoly._from_clean(g) for d, g in groups.items()}

    def substitute_x(self, shift: "BiPoly") -> "BiPoly":
        """Compose X := shift (a polynomial in X and L), Horner-style in X"""
        shift = BiPoly.coerce(shift)
        if not self._terms:
            return BiPoly.zero()
        groups = self._by_x_degree()
        result = BiPoly.zero()
        for d in range(self.degree_x(), -1, -1):
            result = result * shift
            q = groups.get(d)
            if q is not None:
                result = result + q
        return result

    def substitute_lambda(self, value: Scalar) -> "BiPoly":
        """Evaluate L := value, leaving a polynomial in X"""
        value = Sqrt2Number.coerce(value)
        result: Dict[Monomial, Sqrt2Number] = {}
        for (dx, dl), c in self._terms.items():
            term = c * (value ** dl)
            s = result.get((dx, 0))
            result[(dx, 0)] = term if s is None else s + term
        return BiPoly._from_clean({m: c for m, c in result.items() if c})

    def set_lambda_zero(self) -> "BiPoly":
        """Drop every term carrying L (the lambda -> 0 limit)"""
        return BiPoly._from_clean({m: c for m, c in self._terms.items() if m[1] == 0})

    # ---------------------------------------------------------------
    # serialization: [{"dx", "dl", "c"}] ordered by (dx desc, dl desc)
    # ---------------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Monomial, Sqrt2Number]]:
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def to_json_obj(self) -> List[dict]:
        return [{"dx": dx, "dl": dl, "c": str(c)} for (dx, dl), c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, items: Iterable[dict]) -> "BiPoly":
        terms: Dict[Monomial, Sqrt2Number] = {}
        try:
            for item in items:
                dx, dl = int(item["dx"]), int(item["dl"])
                if (dx, dl) in terms:
                    raise ParseError(f"duplicate monomial {(dx, dl)} in polynomial JSON")
                terms[(dx, dl)] = Sqrt2Number.parse(item["c"])
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed polynomial JSON: {e}") from e
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        try:
            items = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed polynomial JSON: {e}") from e
        if not isinstance(items, list):
            raise ParseError("polynomial JSON must be an array of terms")
        return cls.from_json_obj(items)

    # ---------------------------------------------------------------
    # display
    # ---------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (dx, dl), c in self.sorted_terms():
            factors = []
            if dx:
                factors.append("X" if dx == 1 else f"X^{dx}")
            if dl:
                factors.append("L" if dl == 1 else f"L^{dl}")
            negative = c.is_rational() and c.a < 0
            magnitude = -c if negative else c
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            elif magnitude.is_rational():
                body = "*".join([format_rational(magnitude.a)] + factors)
            else:
                body = "*".join([f"({magnitude})"] + factors)
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BiPoly({self})"


X = BiPoly.x()
L = BiPoly.lam()
