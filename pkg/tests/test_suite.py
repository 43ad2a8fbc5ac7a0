import pytest

from config import Config
from errors import SuiteConfigError
from verification.checks import CHECKS
from verification.execution_logger import SuiteCallbackHandler, SuiteExecutionLogger
from verification.report import Status, report_render
from verification.suite import REQUIRED_IDENTITIES, SuiteConfig, ensure_complete, run_suite


class _Recorder(SuiteCallbackHandler):
    def __init__(self):
        self.started = None
        self.reports = []
        self.finished = None

    def on_suite_start(self, suite_name, identity_ids):
        self.started = (suite_name, list(identity_ids))

    def on_report(self, report):
        self.reports.append(report)

    def on_suite_finish(self, reports):
        self.finished = reports


@pytest.fixture(scope="module")
def quick_reports():
    return run_suite(SuiteConfig.preset("quick"))


def _find(reports, identity_id, **params):
    wanted = {k: str(v) for k, v in params.items()}
    return [r for r in reports if r.identity_id == identity_id and r.params_dict == wanted]


class TestRegistry:
    def test_registry_is_complete(self):
        ensure_complete()
        assert set(CHECKS) == set(REQUIRED_IDENTITIES)
        assert len(REQUIRED_IDENTITIES) == 34

    def test_incomplete_registry_is_rejected(self):
        with pytest.raises(SuiteConfigError):
            ensure_complete({"eq12": None})


class TestSuiteConfig:
    def test_presets(self):
        full = SuiteConfig.preset("full")
        quick = SuiteConfig.preset("quick", seed=7)
        assert full.n_max == 10
        assert full.seed == Config.DEFAULT_SEED
        assert quick.seed == 7
        assert quick.n_max < full.n_max

    def test_overrides(self):
        config = SuiteConfig.preset("quick", n_max=3, identities=["thm1", "eq12"])
        assert config.n_max == 3
        assert config.selected() == ["eq12", "thm1"]

    @pytest.mark.parametrize("kwargs", [
        {"name": "huge"},
        {"name": "quick", "n_max": Config.N_MAX_CEILING + 1},
        {"name": "quick", "n_max": -1},
        {"name": "quick", "identities": ["eq99"]},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(SuiteConfigError):
            SuiteConfig.preset(**kwargs)


class TestRunSuite:
    def test_quick_suite_passes(self, quick_reports):
        rendered = report_render(quick_reports)
        assert rendered.exit_status == 0
        assert rendered.counts["unexpected_fail"] == 0
        assert rendered.counts["expected_fail"] > 0
        assert {r.identity_id for r in quick_reports} == set(REQUIRED_IDENTITIES)

    def test_every_correct_identity_passes(self, quick_reports):
        for r in quick_reports:
            if not r.expected_fail:
                assert r.status is not Status.FAIL, (r.identity_id, r.params, r.witness)

    def test_printed_closed_form_witness(self, quick_reports):
        [report] = _find(quick_reports, "eq23-verbatim", alpha=1, **{"lambda": 1}, n=1)
        assert report.status is Status.FAIL
        assert report.expected_fail
        assert report.witness == ("-1/2", "4")

    def test_missing_sign_witness(self, quick_reports):
        [report] = _find(quick_reports, "eq27-verbatim", alpha="1/2", n=1)
        assert report.status is Status.FAIL
        assert report.expected_fail
        assert '"1*s2"' in report.witness[0]
        assert '"-1*s2"' in report.witness[1]
        [signed] = _find(quick_reports, "eq27", alpha="1/2", n=1)
        assert signed.status is Status.PASS

    def test_skips_below_domain(self, quick_reports):
        [report] = _find(quick_reports, "eq27", alpha=1, n=1)
        assert report.status is Status.SKIPPED

    def test_deterministic(self, quick_reports):
        again = run_suite(SuiteConfig.preset("quick"))
        assert report_render(again).json_text == report_render(quick_reports).json_text

    def test_callbacks(self):
        recorder = _Recorder()
        reports = run_suite(SuiteConfig.preset("quick", n_max=3, identities=["eq12", "thm2"]), recorder)
        assert recorder.started == ("quick", ["eq12", "thm2"])
        assert len(recorder.reports) == len(reports)
        assert recorder.finished == reports

    def test_execution_logger_resets(self):
        logger = SuiteExecutionLogger()
        run_suite(SuiteConfig.preset("quick", n_max=2, identities=["eq12"]), logger)
        assert logger.step_count == 0
        assert logger.check_results == []

    def test_broken_check_becomes_failure(self, monkeypatch):
        def boom(config):
            yield from ()
            raise RuntimeError("grid exploded")

        monkeypatch.setitem(CHECKS, "eq12", boom)
        reports = run_suite(SuiteConfig.preset("quick", identities=["eq12"]))
        [report] = reports
        assert report.params_dict == {"stage": "grid"}
        assert report.witness == ("<error>", "RuntimeError: grid exploded")
        assert report_render(reports).exit_status == 1

    def test_shift_recurrences_of_the_euler_and_bernoulli_families(self):
        names = ["thm6-bernoulli", "thm7-bernoulli", "thm7-euler"]
        reports = run_suite(SuiteConfig.preset("quick", identities=names))
        counts = {
            name: [r.status for r in reports if r.identity_id == name].count(Status.PASS)
            for name in names
        }
        assert counts == {"thm6-bernoulli": 14, "thm7-bernoulli": 9, "thm7-euler": 12}
        assert not [r for r in reports if r.status is Status.FAIL]
        [low] = _find(reports, "thm7-bernoulli", m=2, n=2)
        assert low.status is Status.SKIPPED

    def test_stirling_series_through_degenerate_exponential(self):
        reports = run_suite(SuiteConfig.preset("quick", identities=["stirling-series"]))
        assert len(reports) == 45
        assert all(r.status is Status.PASS for r in reports)
