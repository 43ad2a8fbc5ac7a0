"""
Identity Reports
================
Pass/fail records per identity per parameter point, and rendering to a JSON
array, a text table and a summary line.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Mapping, Optional, Sequence, Tuple

from algebra.numeric import HalfInt, Sqrt2Number, format_rational
from algebra.polyring import BiPoly
from errors import ParseError

logger = logging.getLogger(__name__)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def serialize_value(value: Any) -> str:
    """Exact text form of any value a check compares"""
    if isinstance(value, BiPoly):
        return value.to_json()
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (Sqrt2Number, HalfInt)):
        return str(value)
    return str(value)


def _param_text(value: Any) -> str:
    if isinstance(value, str):
        return value
    return serialize_value(value)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: Tuple[Tuple[str, str], ...]
    status: Status
    witness: Optional[Tuple[str, str]] = None
    expected_fail: bool = False
    note: Optional[str] = None

    def __post_init__(self):
        if (self.status is Status.FAIL) != (self.witness is not None):
            raise ValueError(f"{self.identity_id}: a witness is present exactly when the status is fail")

    @property
    def params_dict(self) -> dict:
        return dict(self.params)

    @property
    def unexpected_failure(self) -> bool:
        return self.status is Status.FAIL and not self.expected_fail

    def to_json_obj(self) -> dict:
        obj = {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "status": self.status.value,
            "witness": None if self.witness is None else {"lhs": self.witness[0], "rhs": self.witness[1]},
            "expected_fail": self.expected_fail,
        }
        if self.note:
            obj["note"] = self.note
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "IdentityReport":
        try:
            witness = obj.get("witness")
            return cls(
                identity_id=obj["identity_id"],
                params=tuple(sorted((str(k), str(v)) for k, v in obj["params"].items())),
                status=Status(obj["status"]),
                witness=None if witness is None else (witness["lhs"], witness["rhs"]),
                expected_fail=bool(obj.get("expected_fail", False)),
                note=obj.get("note"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed identity report: {e}") from e

    def sort_key(self):
        return (self.identity_id, tuple((k, _natural(v)) for k, v in self.params))


def _natural(text: str):
    """Numbers order numerically, anything else after them as text"""
    try:
        return (0, Fraction(text), "")
    except (ValueError, ZeroDivisionError):
        return (1, Fraction(0), text)


def _freeze_params(params: Mapping[str, Any]) -> Tuple[Tuple[str, str], ...]:
    return tuple(sorted((str(k), _param_text(v)) for k, v in params.items()))


def compare(
    identity_id: str,
    params: Mapping[str, Any],
    lhs: Any,
    rhs: Any,
    expected_fail: bool = False,
    note: Optional[str] = None,
) -> IdentityReport:
    """Exact comparison, never with a tolerance"""
    if lhs == rhs:
        return IdentityReport(identity_id, _freeze_params(params), Status.PASS,
                              expected_fail=expected_fail, note=note)
    return IdentityReport(
        identity_id,
        _freeze_params(params),
        Status.FAIL,
        witness=(serialize_value(lhs), serialize_value(rhs)),
        expected_fail=expected_fail,
        note=note,
    )


def evaluate_point(
    identity_id: str,
    params: Mapping[str, Any],
    lhs_fn: Callable[[], Any],
    rhs_fn: Callable[[], Any],
    expected_fail: bool = False,
    note: Optional[str] = None,
) -> IdentityReport:
    """Compute both sides lazily; an exception becomes a fail report with the error as witness"""
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
    except Exception as e:
        logger.error(f"❌ {identity_id} {dict(params)} raised {type(e).__name__}: {e}")
        return error_report(identity_id, params, e, expected_fail=expected_fail)
    return compare(identity_id, params, lhs, rhs, expected_fail=expected_fail, note=note)


def skipped(identity_id: str, params: Mapping[str, Any], note: str) -> IdentityReport:
    return IdentityReport(identity_id, _freeze_params(params), Status.SKIPPED, note=note)


def error_report(identity_id: str, params: Mapping[str, Any], error: Exception,
                 expected_fail: bool = False) -> IdentityReport:
    return IdentityReport(
        identity_id,
        _freeze_params(params),
        Status.FAIL,
        witness=("<error>", f"{type(error).__name__}: {error}"),
        expected_fail=expected_fail,
    )


def canonical_order(reports: Iterable[IdentityReport]) -> List[IdentityReport]:
    return sorted(reports, key=IdentityReport.sort_key)


# ===================================================================
# Rendering
# ===================================================================
@dataclass(frozen=True)
class RenderedReport:
    json_text: str
    table_text: str
    summary: str
    exit_status: int
    counts: Mapping[str, int] = field(default_factory=dict)


def summarize(reports: Sequence[IdentityReport]) -> Tuple[str, dict]:
    counts = {
        "pass": sum(1 for r in reports if r.status is Status.PASS),
        "fail": sum(1 for r in reports if r.status is Status.FAIL),
        "skipped": sum(1 for r in reports if r.status is Status.SKIPPED),
        "expected_fail": sum(1 for r in reports if r.status is Status.FAIL and r.expected_fail),
        "unexpected_fail": sum(1 for r in reports if r.unexpected_failure),
    }
    total = len(reports)
    summary = (f"{counts['pass']}/{total}: {counts['pass']} pass, {counts['fail']} fail, "
               f"{counts['skipped']} skipped")
    if counts["expected_fail"]:
        summary += f" ({counts['expected_fail']} expected)"
    return summary, counts


def _shorten(text: str, width: int = 48) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def render_table(reports: Sequence[IdentityReport], summary: str) -> str:
    header = ("identity", "params", "status", "witness")
    rows = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params)
        status = r.status.value + (" (expected)" if r.status is Status.FAIL and r.expected_fail else "")
        witness = "" if r.witness is None else _shorten(f"{r.witness[0]} != {r.witness[1]}")
        rows.append((r.identity_id, params, status, witness))
    widths = [max([len(header[i])] + [len(row[i]) for row in rows]) for i in range(4)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    lines.append(summary)
    return "\n".join(lines) + "\n"


def report_render(reports: Iterable[IdentityReport]) -> RenderedReport:
    ordered = canonical_order(reports)
    summary, counts = summarize(ordered)
    json_text = json.dumps([r.to_json_obj() for r in ordered], ensure_ascii=False, indent=2) + "\n"
    exit_status = 1 if counts["unexpected_fail"] else 0
    return RenderedReport(
        json_text=json_text,
        table_text=render_table(ordered, summary),
        summary=summary,
        exit_status=exit_status,
        counts=counts,
    )


def parse_report_json(text: str) -> List[IdentityReport]:
    try:
        items = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed report JSON: {e}") from e
    if not isinstance(items, list):
        raise ParseError("report JSON must be an array")
    return [IdentityReport.from_json_obj(item) for item in items]
