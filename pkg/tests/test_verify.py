"""Smoke tests for the property-suite harness at reduced campaign sizes.

The full acceptance-scale campaigns run in test_acceptance.py and through
the CLI; here each suite is exercised quickly so harness regressions show
up in the ordinary test run.
"""

import pytest

from liepair.verify import (
    SUITES,
    run_suites,
    suite_appendix,
    suite_brackets,
    suite_cohomology,
    suite_gauge_bridge,
)


def _assert_all_ok(results):
    bad = [r for r in results if not r.ok]
    assert not bad, [f"{r.suite}: {r.name} ({r.detail})" for r in bad]


def test_axioms_suite():
    ok, results = run_suites(["axioms"], seed=123)
    assert ok
    _assert_all_ok(results)


def test_brackets_suite_reduced():
    _assert_all_ok(suite_brackets(seed=123, matched_samples=10))


def test_gauge_bridge_suite_reduced():
    _assert_all_ok(
        suite_gauge_bridge(seed=123, bridge_instances=20, exp_log_instances=9, mc_std_instances=5)
    )


def test_appendix_suite_reduced():
    _assert_all_ok(suite_appendix(seed=123, instances=3, kmax=3))


def test_cohomology_suite_reduced():
    _assert_all_ok(suite_cohomology(seed=123, class_samples=10))


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suites(["nope"], seed=0)


def test_suite_registry_is_complete():
    assert set(SUITES) == {"axioms", "brackets", "gauge-bridge", "appendix", "cohomology"}
