import pytest

import blockperm as bp
from blockperm.verify import SUITE_NAMES, run_suite


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_each_suite_passes_small(suite):
    report = run_suite(suite, max_size=5)
    assert report.checks, suite
    for check in report.checks:
        assert check.ok, f"{check.name}: {check.detail} ({check.counterexample})"


def test_run_all_collects_every_suite():
    report = run_suite("all", max_size=4)
    assert report.passed
    names = [c.name for c in report.checks]
    assert "w-v-inverse" in names and "rect-dual-counts" in names
    body = report.to_json()
    assert body["passed"] is True
    assert body["checks"][0]["seconds"] >= 0


def test_unknown_suite_rejected():
    with pytest.raises(bp.DomainError):
        run_suite("bogus")
    with pytest.raises(bp.DomainError):
        run_suite("all", max_size=-1)
