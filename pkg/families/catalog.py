"""
Family Catalog
==============
Maps a family name and textual parameters onto the table constructors; shared
by the CLI and the MCP server.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

from algebra.numeric import HalfInt, Sqrt2Number, parse_rational
from config import Config
from errors import FamilyDomainError, ParseError
from families.apostol import (
    classical_bernoulli,
    classical_euler,
    coerce_gamma,
    deg_apostol_bernoulli,
    deg_apostol_euler,
)
from families.closed_forms import euler_numbers_closed_form, fubini_numbers_closed_form
from families.fubini import degenerate_fubini, fubini_explicit_thm2, fubini_type
from families.tables import Family, FamilyTable

logger = logging.getLogger(__name__)


def parse_family(name: Union[str, Family]) -> Family:
    try:
        return Family(name)
    except ValueError as e:
        choices = ", ".join(f.value for f in Family)
        raise ParseError(f"unknown family '{name}', expected one of: {choices}") from e


def parse_order(family: Family, alpha) -> Union[HalfInt, int]:
    """Half-integer order for the Fubini families, nonnegative integer otherwise"""
    if isinstance(alpha, str):
        alpha_value: Fraction = parse_rational(alpha)
    else:
        alpha_value = Fraction(alpha)
    if alpha_value < 0:
        raise FamilyDomainError(f"order must be >= 0, got {alpha_value}")
    if family.has_half_integer_order:
        return HalfInt.of(alpha_value)
    if alpha_value.denominator != 1:
        raise ParseError(f"order of {family.value} must be a nonnegative integer, got {alpha_value}")
    return int(alpha_value)


def parse_lambda(text: Optional[str]) -> Optional[Fraction]:
    """None for the symbolic mode"""
    if text is None or text == "symbolic":
        return None
    return parse_rational(text)


def check_gamma(family: Family, gamma: Sqrt2Number) -> None:
    if family is Family.DEG_APOSTOL_EULER and gamma == -1:
        raise FamilyDomainError("gamma = -1 is not allowed for Apostol-Euler polynomials")
    if family is Family.DEG_APOSTOL_BERNOULLI and gamma.is_zero():
        raise FamilyDomainError("gamma = 0 is not allowed for Apostol-Bernoulli polynomials")


def check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise FamilyDomainError(f"n_max must be >= 0, got {n_max}")
    if n_max > Config.N_MAX_CEILING:
        raise FamilyDomainError(f"n_max={n_max} exceeds the configured ceiling {Config.N_MAX_CEILING}")


def check_combinatorics_n(n: int, k: int) -> None:
    """Index guard for the stirling and bell commands"""
    if n < 0 or k < 0:
        raise FamilyDomainError(f"indices must be >= 0, got n={n}, k={k}")
    if n > Config.COMBINATORICS_N_CEILING:
        raise FamilyDomainError(f"n={n} exceeds the configured ceiling {Config.COMBINATORICS_N_CEILING}")


def build_table(family, alpha, n_max: int, gamma="1") -> FamilyTable:
    """Symbolic table (L kept as an indeterminate) for any catalog family"""
    family = parse_family(family)
    order = parse_order(family, alpha)
    check_n_max(n_max)
    if family is Family.DEG_FUBINI:
        return degenerate_fubini(order, n_max)
    if family is Family.FUBINI:
        return fubini_type(order, n_max)
    if family is Family.CLASSICAL_BERNOULLI:
        return classical_bernoulli(n_max, order)
    if family is Family.CLASSICAL_EULER:
        return classical_euler(n_max, order)
    gamma = coerce_gamma(gamma)
    check_gamma(family, gamma)
    if family is Family.DEG_APOSTOL_BERNOULLI:
        return deg_apostol_bernoulli(order, gamma, n_max)
    return deg_apostol_euler(order, gamma, n_max)


def compute_entry(family, alpha, n: int, gamma="1", lam: Optional[Fraction] = None,
                  x: Optional[Fraction] = None, method: str = "series", verbatim: bool = False):
    """One entry of a family: a BiPoly, or an exact number once x (and lambda when needed) are fixed

    method "series" reads the generating-function table, "explicit" uses the
    Stirling-number formula (fubini family), "closed-form" the Bell-polynomial
    closed form for the numbers at a rational lambda (deg-fubini, and
    deg-apostol-euler with gamma = -1/2).
    """
    family = parse_family(family)
    if n < 0:
        raise FamilyDomainError(f"index must be >= 0, got {n}")
    check_n_max(n)
    if verbatim and method != "closed-form":
        raise FamilyDomainError("the verbatim switch only applies to the closed-form method")

    if method == "closed-form":
        if lam is None:
            raise FamilyDomainError("closed forms need a rational lambda")
        if x not in (None, 0):
            raise FamilyDomainError("closed forms give the numbers, x must be 0")
        if family is Family.DEG_FUBINI:
            return fubini_numbers_closed_form(parse_order(family, alpha), n, lam, verbatim=verbatim)
        if family is Family.DEG_APOSTOL_EULER:
            if coerce_gamma(gamma) != Sqrt2Number(Fraction(-1, 2)):
                raise FamilyDomainError("the Apostol-Euler closed form needs gamma = -1/2")
            # the Euler order here is 2 alpha
            half_order = HalfInt(parse_order(family, alpha))
            return euler_numbers_closed_form(half_order, n, lam, verbatim=verbatim)
        raise FamilyDomainError(f"no closed form for family {family.value}")

    if method == "explicit":
        if family is not Family.FUBINI:
            raise FamilyDomainError("the explicit formula is available for the fubini family")
        poly = fubini_explicit_thm2(parse_order(family, alpha), n)
    elif method == "series":
        poly = build_table(family, alpha, n, gamma)[n]
    else:
        raise FamilyDomainError(f"unknown method '{method}'")

    if lam is not None:
        poly = poly.substitute_lambda(lam)
    if x is None:
        return poly
    if lam is None and poly.degree_l() > 0:
        raise FamilyDomainError("evaluating at x needs a rational lambda")
    return poly.evaluate(x, lam if lam is not None else 0)
