"""The self-check runner: ordering, stability, and error handling."""

import pytest

from monhom.errors import MonhomError
from monhom.verify import (CheckResult, render_json, render_text, run_suites)


def test_single_suite_runs_green():
    results = run_suites(["lemma-nuli"])
    assert len(results) == 6
    assert all(r.passed for r in results)
    assert all(r.name.startswith("lemma-nuli[") for r in results)
    assert all(r.seconds >= 0 for r in results)


def test_suites_run_in_declaration_order():
    results = run_suites(["kaehler", "degree-bridge"])
    names = [r.name.split("[")[0] for r in results]
    assert names == ["degree-bridge"] * 6 + ["kaehler"] * 6


def test_unknown_suite_rejected():
    with pytest.raises(MonhomError, match="unknown suite"):
        run_suites(["nope"])
    with pytest.raises(MonhomError):
        run_suites([])


def test_reports_are_byte_stable():
    first = run_suites(["degree-bridge"])
    second = run_suites(["degree-bridge"])
    assert render_text(first) == render_text(second)
    assert render_json(first) == render_json(second)
    assert render_text(first).splitlines()[-1] == "6/6 checks passed"


def test_timings_never_reach_the_report():
    res = CheckResult("x", "anchor", True, "fine", seconds=1.25)
    assert "seconds" not in res.to_json()
    rendered = render_text([res]) + render_json([res])
    assert "1.25" not in rendered


def test_failures_are_counted():
    good = CheckResult("a", "law", True, "ok", 0.0)
    bad = CheckResult("b", "law", False, "broken", 0.0)
    text = render_text([good, bad])
    assert "FAIL b: law" in text
    assert text.splitlines()[-1] == "1/2 checks passed"
    assert '"failed": 1' in render_json([good, bad])
