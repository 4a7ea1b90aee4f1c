"""The law registry, the runner, and the two report renderers."""

import random

import pytest

from sdlab.errors import NotZAlgebraError
from sdlab.harness import (
    LAWS,
    Collector,
    Law,
    LawResult,
    Report,
    SuiteConfig,
    laws_for_suite,
    render_json,
    render_text,
    run_suite,
)

SMALL = SuiteConfig(suite="finite", max_atoms=2, max_points=3)


def test_registry_shape():
    ids = [l.law_id for l in LAWS]
    assert len(ids) == len(set(ids))
    assert len(LAWS) == 37
    assert len(laws_for_suite("finite")) == 31
    assert len(laws_for_suite("symbolic")) == 9
    assert laws_for_suite("all") == list(LAWS)
    for l in LAWS:
        assert l.suites <= {"finite", "symbolic"}
        assert l.statement


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(suite="everything")
    with pytest.raises(ValueError):
        SuiteConfig(max_atoms=-1)
    with pytest.raises(ValueError):
        SuiteConfig(max_points=-2)


def test_status_precedence():
    r = LawResult("x", "s")
    assert r.status == "pass"
    r.undetermined = 1
    assert r.status == "undetermined"
    r.passed = 1
    assert r.status == "pass"
    r.failed = 1
    assert r.status == "fail"
    r.skipped = True
    assert r.status == "skipped"


def test_collector_keeps_first_counterexample():
    col = Collector(LawResult("x", "s"))
    assert col.check(True)
    assert not col.check(False, "first")
    col.check(False, "second")
    col.undetermined("note")
    assert col.result.instances == 4
    assert col.result.passed == 1 and col.result.failed == 2
    assert col.result.counterexample == "first"


def test_small_finite_run_is_clean():
    report = run_suite(SMALL)
    assert len(report.results) == 31
    assert report.failures == 0 and report.exit_code == 0
    for r in report.results:
        assert r.status == "pass"
        assert r.instances > 0


def test_symbolic_suite_is_clean():
    report = run_suite(SuiteConfig(suite="symbolic"))
    assert len(report.results) == 9
    assert report.failures == 0
    assert all(r.status == "pass" for r in report.results)


def test_oversized_request_skips_per_law():
    report = run_suite(SuiteConfig(suite="finite", max_atoms=9, max_points=9))
    skipped = [r for r in report.results if r.status == "skipped"]
    assert len(skipped) == 26
    for r in skipped:
        assert "exceeds this law's exhaustive cap" in r.skip_reason
    assert report.failures == 0
    ran = [r for r in report.results if r.status != "skipped"]
    assert ran and all(r.status == "pass" for r in ran)


def test_reports_are_deterministic():
    a = run_suite(SMALL)
    b = run_suite(SMALL)
    assert render_json(a) == render_json(b)
    assert render_text(a) == render_text(b)


def test_render_text_shape():
    report = run_suite(SuiteConfig(suite="finite", max_atoms=1, max_points=1))
    text = render_text(report)
    assert text.startswith("suite: finite")
    for r in report.results:
        assert r.law_id in text
    assert "result: PASS" in text
    assert text.endswith("skipped)\n")


def test_skip_lines_appear_in_text():
    report = run_suite(SuiteConfig(suite="finite", max_atoms=9, max_points=9))
    text = render_text(report)
    assert "[     SKIPPED]" in text
    assert "skipped: requested" in text


def test_render_json_layout():
    report = run_suite(SuiteConfig(suite="finite", max_atoms=1, max_points=1))
    import json

    payload = json.loads(render_json(report))
    assert payload["config"]["max_atoms"] == 1
    assert payload["summary"]["laws"] == len(report.results)
    assert payload["summary"]["failures"] == 0
    for entry in payload["laws"]:
        assert entry["status"] in ("pass", "fail", "undetermined", "skipped")
        assert "wall_time" not in entry


def _with_temp_law(fn, suites=("finite",)):
    temp = Law("temp.injected", "an injected probe law", frozenset(suites), fn)
    LAWS.append(temp)
    try:
        return run_suite(SuiteConfig(suite="finite", max_atoms=0, max_points=0))
    finally:
        LAWS.remove(temp)


def test_failing_law_sets_exit_code():
    def fn(cfg, col, rng):
        col.check(False, "forced counterexample")

    report = _with_temp_law(fn)
    by_id = {r.law_id: r for r in report.results}
    assert by_id["temp.injected"].status == "fail"
    assert by_id["temp.injected"].counterexample == "forced counterexample"
    assert report.failures == 1 and report.exit_code == 1


def test_library_errors_become_failures():
    def fn(cfg, col, rng):
        raise NotZAlgebraError("boom")

    report = _with_temp_law(fn)
    by_id = {r.law_id: r for r in report.results}
    assert by_id["temp.injected"].status == "fail"
    assert by_id["temp.injected"].counterexample.startswith("unexpected error:")


def test_undetermined_does_not_fail_the_run():
    def fn(cfg, col, rng):
        col.undetermined("out of witnesses")

    report = _with_temp_law(fn)
    by_id = {r.law_id: r for r in report.results}
    assert by_id["temp.injected"].status == "undetermined"
    assert report.exit_code == 0


def test_meta_laws_can_be_excluded():
    report = run_suite(SMALL, include_meta=False)
    assert all(not r.law_id.startswith("harness.") for r in report.results)
    assert len(report.results) == 29


def test_per_law_rng_is_isolated():
    seen = {}

    def fn(cfg, col, rng):
        seen["value"] = rng.random()
        col.check(True)

    _with_temp_law(fn)
    expected = random.Random("0:temp.injected").random()
    assert seen["value"] == expected
