"""
Verification Suite
==================
Grid presets, the identity registry and the suite runner.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from algebra.numeric import HalfInt, Sqrt2Number
from config import Config
from errors import SuiteConfigError
from verification.checks import CHECKS
from verification.execution_logger import SuiteCallbackHandler
from verification.report import IdentityReport, canonical_order, error_report

logger = logging.getLogger(__name__)

# every identity the default suite must cover
REQUIRED_IDENTITIES: Tuple[str, ...] = (
    "eq12", "stirling-series", "bell-brute",
    "cf14-vs-bell", "cf14-rearranged", "cf15-vs-bell", "cf17-vs-cf15", "cf17-vs-bell", "eq5",
    "thm2", "eq11", "thm3", "eq16", "eq25", "eq26",
    "eq22", "eq27", "eq27-verbatim",
    "thm1", "eq23-verbatim", "eq24", "eq24-verbatim",
    "thm5", "thm6", "thm6-euler", "thm6-bernoulli", "thm7", "thm7-limit", "thm7-euler", "thm7-bernoulli",
    "limit-bernoulli", "limit-euler", "carlitz-beta1", "euler-order-additivity",
)


def ensure_complete(registry=None) -> None:
    """Raise unless the registry and REQUIRED_IDENTITIES name the same identities"""
    registry = CHECKS if registry is None else registry
    missing = [i for i in REQUIRED_IDENTITIES if i not in registry]
    unlisted = [i for i in registry if i not in REQUIRED_IDENTITIES]
    if missing or unlisted:
        raise SuiteConfigError(f"identity registry mismatch: missing={missing}, unlisted={unlisted}")


def _halves(*values) -> Tuple[HalfInt, ...]:
    return tuple(HalfInt.of(Fraction(v)) for v in values)


def _rationals(*values) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class SuiteConfig:
    name: str
    n_max: int
    stirling_n_max: int
    bell_n_max: int
    limit_n_max: int
    additivity_n_max: int
    alphas: Tuple[HalfInt, ...]
    lambdas: Tuple[Fraction, ...]
    closed_form_alphas: Tuple[HalfInt, ...]
    closed_form_lambdas: Tuple[Fraction, ...]
    eq27_orders: Tuple[int, ...]
    euler_orders: Tuple[int, ...]
    additivity_gammas: Tuple[Sqrt2Number, ...]
    scaling_instances: int
    seed: int
    identities: Optional[Tuple[str, ...]] = None

    @classmethod
    def full(cls, seed: int = None) -> "SuiteConfig":
        return cls(
            name="full",
            n_max=10,
            stirling_n_max=12,
            bell_n_max=8,
            limit_n_max=12,
            additivity_n_max=8,
            alphas=_halves(0, "1/2", 1, "3/2", 2, 3),
            lambdas=_rationals(1, "1/2", "-1/3", 2, "5/7"),
            closed_form_alphas=_halves("1/2", 1, 2),
            closed_form_lambdas=_rationals(1, "1/2", "-1/3", 2),
            eq27_orders=(1, 2, 3, 4),
            euler_orders=(1, 2, 3, 4),
            additivity_gammas=(Sqrt2Number(1), Sqrt2Number(Fraction(-1, 2)), Sqrt2Number.sqrt2()),
            scaling_instances=20,
            seed=Config.DEFAULT_SEED if seed is None else seed,
        )

    @classmethod
    def quick(cls, seed: int = None) -> "SuiteConfig":
        return cls(
            name="quick",
            n_max=6,
            stirling_n_max=8,
            bell_n_max=5,
            limit_n_max=8,
            additivity_n_max=6,
            alphas=_halves(0, "1/2", 1),
            lambdas=_rationals(1, "1/2", "-1/3"),
            closed_form_alphas=_halves("1/2", 1),
            closed_form_lambdas=_rationals(1, "-1/3"),
            eq27_orders=(1, 2),
            euler_orders=(1, 2),
            additivity_gammas=(Sqrt2Number(1), Sqrt2Number(Fraction(-1, 2))),
            scaling_instances=5,
            seed=Config.DEFAULT_SEED if seed is None else seed,
        )

    @classmethod
    def preset(cls, name: str, n_max: int = None, seed: int = None,
               identities: Iterable[str] = None) -> "SuiteConfig":
        presets = {"full": cls.full, "quick": cls.quick}
        if name not in presets:
            raise SuiteConfigError(f"unknown suite '{name}', expected one of {sorted(presets)}")
        config = presets[name](seed)
        if n_max is not None:
            config = replace(config, n_max=n_max)
        if identities is not None:
            config = replace(config, identities=tuple(identities))
        config.validate()
        return config

    def validate(self) -> None:
        ceiling = Config.N_MAX_CEILING
        bounds = {
            "n_max": self.n_max,
            "stirling_n_max": self.stirling_n_max,
            "bell_n_max": self.bell_n_max,
            "limit_n_max": self.limit_n_max,
            "additivity_n_max": self.additivity_n_max,
        }
        for field_name, value in bounds.items():
            if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value <= ceiling:
                raise SuiteConfigError(f"{field_name}={value!r} outside 0..{ceiling}")
        if any(not a.is_nonnegative() for a in self.alphas + self.closed_form_alphas):
            raise SuiteConfigError("orders alpha must be >= 0")
        if any(o < 1 for o in self.eq27_orders):
            raise SuiteConfigError("2 alpha in the Bernoulli relation must be >= 1")
        if any(m < 0 for m in self.euler_orders):
            raise SuiteConfigError("Euler orders must be >= 0")
        if any(g == -1 for g in self.additivity_gammas):
            raise SuiteConfigError("gamma = -1 has no Apostol-Euler polynomials")
        if self.scaling_instances < 0:
            raise SuiteConfigError("scaling_instances must be >= 0")
        if self.identities is not None:
            unknown = [i for i in self.identities if i not in REQUIRED_IDENTITIES]
            if unknown:
                raise SuiteConfigError(f"unknown identity ids: {unknown}")

    def selected(self) -> List[str]:
        if self.identities is None:
            return list(REQUIRED_IDENTITIES)
        return [i for i in REQUIRED_IDENTITIES if i in self.identities]


def run_suite(config: SuiteConfig, callbacks: SuiteCallbackHandler = None) -> List[IdentityReport]:
    """One report per (identity, parameter point), in canonical order"""
    ensure_complete()
    config.validate()
    callbacks = callbacks or SuiteCallbackHandler()
    identity_ids = config.selected()
    callbacks.on_suite_start(config.name, identity_ids)

    reports: List[IdentityReport] = []
    for identity_id in identity_ids:
        callbacks.on_check_start(identity_id)
        produced: List[IdentityReport] = []
        try:
            for report in CHECKS[identity_id](config):
                callbacks.on_report(report)
                produced.append(report)
        except Exception as e:
            callbacks.on_check_error(identity_id, e)
            produced.append(error_report(identity_id, {"stage": "grid"}, e))
        callbacks.on_check_end(identity_id, produced)
        reports.extend(produced)

    ordered = canonical_order(reports)
    callbacks.on_suite_finish(ordered)
    return ordered
