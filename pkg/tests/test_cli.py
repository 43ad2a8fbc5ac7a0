import io
import json

import pytest

from algebra.polyring import BiPoly, X
from config import Config
from families.tables import FamilyTable
from main import EXIT_IDENTITY_FAIL, EXIT_OK, EXIT_USAGE, main
from verification.checks import CHECKS
from verification.report import compare, parse_report_json


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    status = main(argv, stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def test_stirling():
    assert run(["stirling", "--n", "4", "--k", "2"]) == (EXIT_OK, "7\n", "")


def test_stirling_index_ceiling():
    top = str(Config.COMBINATORICS_N_CEILING)
    assert run(["stirling", "--n", top, "--k", "1"])[1] == "1\n"
    status, out, err = run(["stirling", "--n", str(Config.COMBINATORICS_N_CEILING + 1), "--k", "1"])
    assert status == EXIT_USAGE
    assert "FamilyDomainError" in err


def test_bell_presets():
    assert run(["bell", "--n", "4", "--k", "2", "--args", "2,3,5"])[1] == "67\n"
    assert run(["bell", "--n", "5", "--k", "3"])[1] == "25\n"
    assert run(["bell", "--n", "4", "--k", "2", "--kind", "degenerate", "--lambda", "0"])[1] == "7\n"
    assert run(["bell", "--n", "2", "--k", "1", "--kind", "falling", "--lambda", "1/2"])[1] == "-1/4\n"


def test_table_json_round_trip():
    status, out, _ = run(["table", "--family", "deg-fubini", "--alpha", "1", "--n-max", "3"])
    assert status == EXIT_OK
    table = FamilyTable.from_json(out)
    assert table[0] == 2
    assert table[1] == 2 * X + 4
    assert json.loads(out)["values"][0] == [{"dx": 0, "dl": 0, "c": "2"}]


def test_table_csv():
    status, out, _ = run(["table", "--family", "deg-fubini", "--n-max", "2", "--format", "csv",
                          "--lambda", "1", "--x", "0"])
    assert status == EXIT_OK
    assert out == "n,value\n0,2\n1,4\n2,12\n"


def test_table_to_file(tmp_path):
    target = tmp_path / "table.json"
    status, out, _ = run(["table", "--family", "fubini", "--alpha", "1/2", "--n-max", "2",
                          "--lambda", "0", "--output", str(target)])
    assert status == EXIT_OK
    assert out == ""
    assert FamilyTable.from_json(target.read_text(encoding="utf-8")).lam == 0


def test_value():
    status, out, _ = run(["value", "--family", "fubini", "--n", "2", "--method", "explicit"])
    assert status == EXIT_OK
    assert BiPoly.from_json(out) == 2 * X ** 2 + 8 * X + 16
    assert run(["value", "--family", "deg-fubini", "--n", "2", "--lambda", "1/2",
                "--method", "closed-form"])[1] == "14\n"
    assert run(["value", "--family", "deg-fubini", "--n", "1", "--lambda", "1",
                "--method", "closed-form", "--verbatim"])[1] == "-1/2\n"


@pytest.mark.parametrize("argv", [
    [],
    ["stirling", "--n", "x", "--k", "1"],
    ["stirling", "--n", "-1", "--k", "1"],
    ["table", "--family", "nope", "--n-max", "2"],
    ["table", "--family", "fubini", "--n-max", "99"],
    ["table", "--family", "fubini", "--n-max", "2", "--format", "csv"],
    ["table", "--family", "fubini", "--n-max", "2", "--x", "1"],
    ["value", "--family", "deg-fubini", "--n", "2", "--method", "closed-form"],
    ["bell", "--n", "4", "--k", "2", "--args", "1"],
    ["bell", "--n", "4", "--k", "2", "--args", "1,1,1", "--kind", "ones"],
    ["bell", "--n", "2", "--k", "1", "--args", "1/0,1"],
    ["verify", "--suite", "quick", "--identities", "eq99"],
    ["stirling", "--n", "100000", "--k", "2"],
    ["bell", "--n", "400", "--k", "3"],
])
def test_usage_errors(argv):
    status, out, err = run(argv)
    assert status == EXIT_USAGE
    assert out == ""
    assert err.startswith("❌")


def test_help_exits_cleanly(capsys):
    assert run(["--help"])[0] == EXIT_OK


def test_verify_selected_identities():
    status, out, _ = run(["verify", "--suite", "quick", "--n-max", "4",
                          "--identities", "eq12,thm2,eq23-verbatim"])
    assert status == EXIT_OK
    reports = parse_report_json(out)
    assert {r.identity_id for r in reports} == {"eq12", "thm2", "eq23-verbatim"}


def test_verify_text_format():
    status, out, _ = run(["verify", "--suite", "quick", "--n-max", "3", "--identities", "eq12",
                          "--format", "text"])
    assert status == EXIT_OK
    assert out.splitlines()[-1] == "10/10: 10 pass, 0 fail, 0 skipped"


def test_verify_unexpected_failure(monkeypatch):
    def wrong(config):
        yield compare("eq12", {"n": 0}, 1, 2)

    monkeypatch.setitem(CHECKS, "eq12", wrong)
    status, out, err = run(["verify", "--suite", "quick", "--identities", "eq12"])
    assert status == EXIT_IDENTITY_FAIL
    assert parse_report_json(out)[0].witness == ("1", "2")
    assert "unexpected" in err
