"""
Command-Line Interface
======================
python main.py table|value|bell|stirling|verify ...

Payloads go to standard output (or --output); diagnostics and logs go to
standard error. Exit codes: 0 success, 1 unexpected identity failure,
2 usage error.
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, TextIO

from algebra.combinatorics import bell_partial, degenerate_unit_args, falling_args, stirling2
from algebra.numeric import format_rational, parse_rational
from algebra.polyring import BiPoly
from config import Config
from errors import CliUsageError, FubiniError
from families.catalog import build_table, check_combinatorics_n, compute_entry, parse_lambda
from families.tables import Family
from verification.execution_logger import SuiteExecutionLogger
from verification.report import report_render
from verification.suite import SuiteConfig, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAIL = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so main() owns the exit code"""

    def error(self, message):
        raise CliUsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="main.py", description="Exact degenerate Fubini-type and Apostol polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = [f.value for f in Family]

    table = sub.add_parser("table", help="tabulate a polynomial family for n = 0..n_max")
    table.add_argument("--family", required=True, choices=families)
    table.add_argument("--alpha", default="1", help='order: integer or "p/2" for the Fubini families')
    table.add_argument("--gamma", default="1", help='Apostol parameter, e.g. "-1/2" or "1+1*s2"')
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--lambda", dest="lam", default="symbolic", help='"symbolic" or a rational')
    table.add_argument("--x", default=None, help="rational x, required for csv")
    table.add_argument("--format", choices=["json", "csv"], default="json")
    table.add_argument("--output", default=None)

    value = sub.add_parser("value", help="a single entry of a family")
    value.add_argument("--family", required=True, choices=families)
    value.add_argument("--alpha", default="1")
    value.add_argument("--gamma", default="1")
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--lambda", dest="lam", default="symbolic")
    value.add_argument("--x", default=None)
    value.add_argument("--method", choices=["series", "explicit", "closed-form"], default="series")
    value.add_argument("--verbatim", action="store_true", help="closed form exactly as commonly printed")
    value.add_argument("--output", default=None)

    bell = sub.add_parser("bell", help="partial Bell polynomial B_{n,k}")
    bell.add_argument("--n", type=int, required=True)
    bell.add_argument("--k", type=int, required=True)
    bell.add_argument("--args", default=None, help="comma-separated rationals x_1,x_2,...")
    bell.add_argument("--kind", choices=["ones", "degenerate", "falling"], default=None,
                      help="argument presets: all ones, (1)_{j,lambda}, <lambda>_j")
    bell.add_argument("--lambda", dest="lam", default=None)
    bell.add_argument("--output", default=None)

    stirling = sub.add_parser("stirling", help="Stirling number of the second kind S(n, k)")
    stirling.add_argument("--n", type=int, required=True)
    stirling.add_argument("--k", type=int, required=True)
    stirling.add_argument("--output", default=None)

    verify = sub.add_parser("verify", help="run the identity verification suite")
    verify.add_argument("--suite", choices=["full", "quick"], default="full")
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--identities", default=None, help="comma-separated identity ids")
    verify.add_argument("--format", choices=["json", "text"], default="json")
    verify.add_argument("--output", default=None)
    return parser


# ===================================================================
# Subcommands; each returns (payload, exit status)
# ===================================================================
def _require_rational(text: Optional[str], flag: str):
    if text is None or text == "symbolic":
        raise CliUsageError(f"{flag} must be a rational for this output")
    return parse_rational(text)


def _cmd_table(args) -> tuple:
    table = build_table(args.family, args.alpha, args.n_max, args.gamma)
    lam = parse_lambda(args.lam)
    if args.format == "csv":
        lam = _require_rational(args.lam, "--lambda")
        x = _require_rational(args.x, "--x")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "value"])
        for n, v in enumerate(table.evaluate(x, lam)):
            writer.writerow([n, str(v)])
        return buffer.getvalue(), EXIT_OK
    if args.x is not None:
        raise CliUsageError("--x is only used with --format csv")
    if lam is not None:
        table = table.substitute_lambda(lam)
    return table.to_json() + "\n", EXIT_OK


def _cmd_value(args) -> tuple:
    lam = parse_lambda(args.lam)
    x = None if args.x is None else parse_rational(args.x)
    result = compute_entry(
        args.family, args.alpha, args.n, gamma=args.gamma, lam=lam, x=x,
        method=args.method, verbatim=args.verbatim,
    )
    if isinstance(result, BiPoly):
        return result.to_json() + "\n", EXIT_OK
    return str(result) + "\n", EXIT_OK


def _cmd_bell(args) -> tuple:
    n, k = args.n, args.k
    check_combinatorics_n(n, k)
    if args.args is not None and args.kind is not None:
        raise CliUsageError("give either --args or --kind, not both")
    m = max(n - k + 1, 0)
    if args.args is not None:
        xs = [parse_rational(part) for part in args.args.split(",") if part.strip()]
    elif args.kind in (None, "ones"):
        xs = [1] * m
    else:
        lam = _require_rational(args.lam, "--lambda")
        xs = degenerate_unit_args(m, lam) if args.kind == "degenerate" else falling_args(m, lam)
    result = bell_partial(n, k, xs)
    return format_rational(result) + "\n", EXIT_OK


def _cmd_stirling(args) -> tuple:
    check_combinatorics_n(args.n, args.k)
    return f"{stirling2(args.n, args.k)}\n", EXIT_OK


def _cmd_verify(args) -> tuple:
    identities = None
    if args.identities:
        identities = [part.strip() for part in args.identities.split(",") if part.strip()]
    config = SuiteConfig.preset(args.suite, n_max=args.n_max, seed=args.seed, identities=identities)
    reports = run_suite(config, SuiteExecutionLogger())
    rendered = report_render(reports)
    logger.info(f"📊 {rendered.summary}")
    payload = rendered.json_text if args.format == "json" else rendered.table_text
    return payload, rendered.exit_status


COMMANDS = {
    "table": _cmd_table,
    "value": _cmd_value,
    "bell": _cmd_bell,
    "stirling": _cmd_stirling,
    "verify": _cmd_verify,
}


def _emit(payload: str, output: Optional[str], stdout: TextIO) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(payload)
        logger.info(f"📝 written to {output}")
    else:
        stdout.write(payload)


def main(argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload, status = COMMANDS[args.command](args)
        _emit(payload, args.output, stdout)
    except CliUsageError as e:
        stderr.write(f"❌ usage: {e}\n")
        return EXIT_USAGE
    except FubiniError as e:
        stderr.write(f"❌ {json.dumps(e.to_dict(), ensure_ascii=False)}\n")
        return EXIT_USAGE
    except (ValueError, IndexError) as e:
        stderr.write(f"❌ {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    if status == EXIT_IDENTITY_FAIL:
        stderr.write("❌ verification found unexpected failures\n")
    return status


if __name__ == "__main__":
    Config.validate()
    sys.exit(main())
