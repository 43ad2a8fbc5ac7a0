"""
Family Tables
=============
Immutable tabulations of a polynomial family for indices 0..n_max, plus the
JSON codec used by the CLI and the MCP server.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from algebra.numeric import HalfInt, Sqrt2Number, format_rational, parse_rational
from algebra.polyring import BiPoly
from errors import FamilyDomainError, ParseError


class Family(str, Enum):
    DEG_FUBINI = "deg-fubini"
    FUBINI = "fubini"
    DEG_APOSTOL_BERNOULLI = "deg-apostol-bernoulli"
    DEG_APOSTOL_EULER = "deg-apostol-euler"
    CLASSICAL_BERNOULLI = "classical-bernoulli"
    CLASSICAL_EULER = "classical-euler"

    @property
    def has_half_integer_order(self) -> bool:
        return self in (Family.DEG_FUBINI, Family.FUBINI)

    @property
    def has_gamma(self) -> bool:
        return self in (Family.DEG_APOSTOL_BERNOULLI, Family.DEG_APOSTOL_EULER)


Order = Union[HalfInt, int]


@dataclass(frozen=True)
class FamilyTable:
    family: Family
    order: Order
    n_max: int
    values: Tuple[BiPoly, ...]
    gamma: Optional[Sqrt2Number] = None
    # None while lambda is the symbolic indeterminate L
    lam: Optional[Fraction] = None

    def __post_init__(self):
        if len(self.values) != self.n_max + 1:
            raise ValueError(f"expected {self.n_max + 1} values, got {len(self.values)}")
        for n, p in enumerate(self.values):
            if p.degree_x() > n or p.degree_l() > n:
                raise ValueError(f"value {n} of {self.family.value} exceeds degree bound: {p}")

    def __getitem__(self, n: int) -> BiPoly:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def substitute_lambda(self, lam) -> "FamilyTable":
        """Table with L evaluated at a rational lambda"""
        if self.lam is not None:
            raise FamilyDomainError("lambda already substituted in this table")
        lam = Fraction(lam)
        return replace(self, values=tuple(v.substitute_lambda(lam) for v in self.values), lam=lam)

    def set_lambda_zero(self) -> "FamilyTable":
        return replace(self, values=tuple(v.set_lambda_zero() for v in self.values), lam=Fraction(0))

    def evaluate(self, x, lam=None) -> Tuple[Sqrt2Number, ...]:
        if lam is None:
            if self.lam is None:
                raise FamilyDomainError("a rational lambda is needed to evaluate a symbolic table")
            lam = self.lam
        return tuple(v.evaluate(x, lam) for v in self.values)

    # ---------------------------------------------------------------
    # JSON
    # ---------------------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "family": self.family.value,
            "alpha": str(self.order),
            "gamma": None if self.gamma is None else str(self.gamma),
            "n_max": self.n_max,
            "lambda": "symbolic" if self.lam is None else format_rational(self.lam),
            "values": [v.to_json_obj() for v in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FamilyTable":
        try:
            family = Family(obj["family"])
            if family.has_half_integer_order:
                order: Order = HalfInt.parse(obj["alpha"])
            else:
                q = parse_rational(obj["alpha"])
                if q.denominator != 1:
                    raise ParseError(f"order of {family.value} must be an integer, got {obj['alpha']}")
                order = int(q)
            gamma = None if obj.get("gamma") is None else Sqrt2Number.parse(obj["gamma"])
            lam_text = obj.get("lambda", "symbolic")
            lam = None if lam_text == "symbolic" else parse_rational(lam_text)
            values = tuple(BiPoly.from_json_obj(v) for v in obj["values"])
            n_max = int(obj["n_max"])
            return cls(family=family, order=order, n_max=n_max, values=values, gamma=gamma, lam=lam)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"malformed family table JSON: {e}") from e

    @classmethod
    def from_json(cls, text: str) -> "FamilyTable":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed family table JSON: {e}") from e
        return cls.from_json_obj(obj)
