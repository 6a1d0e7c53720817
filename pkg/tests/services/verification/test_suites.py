"""Tests for the verification suites, on reduced sweep sizes."""

import pytest

from app.config import settings
from app.models.report import Status
from app.services.verification import ReportFormat, SuiteName, SuiteSpec, emit_report, run_suite


@pytest.fixture
def small_sweeps(monkeypatch):
    """Shrink the randomized sweeps so a suite runs in seconds."""
    sweeps = settings.sweeps
    monkeypatch.setattr(sweeps, "coloring_graphs", 4)
    monkeypatch.setattr(sweeps, "coloring_max_vertices", 7)
    monkeypatch.setattr(sweeps, "sandwich_graphs", 6)
    monkeypatch.setattr(sweeps, "sandwich_max_vertices", 5)
    monkeypatch.setattr(sweeps, "sandwich_max_radius", 3)
    monkeypatch.setattr(sweeps, "kierstead_yang_graphs", 3)
    monkeypatch.setattr(sweeps, "kierstead_yang_max_vertices", 5)
    monkeypatch.setattr(sweeps, "bipartite_graphs", 4)
    return sweeps


def test_order_sandwich_passes(small_sweeps):
    report = run_suite(SuiteSpec(SuiteName.ORDER_SANDWICH, seed=11))
    assert report.passed
    assert report.entry("sandwich_strong_not_in_distance").computed == 0
    assert report.entry("td_path_7").status is Status.PASS
    assert report.entry("wcol_inf_cycle_5").expected == 4


def test_suite_reports_are_reproducible(small_sweeps):
    spec = SuiteSpec(SuiteName.ORDER_SANDWICH, seed=5)
    first = emit_report(run_suite(spec), ReportFormat.JSONL)
    second = emit_report(run_suite(spec), ReportFormat.JSONL)
    assert first == second


def test_coloring_properties_pass(small_sweeps):
    report = run_suite(SuiteSpec(SuiteName.COLORING_PROPERTIES, seed=3))
    assert report.passed
    assert report.entry("odd_coloring_improper").computed == 0
    assert report.entry("bipartite_odd_union_not_bipartite").computed == 0


@pytest.mark.slow
def test_paper_table_passes():
    report = run_suite(SuiteSpec(SuiteName.PAPER_TABLE))
    assert report.passed
    assert report.entry("bound_planar_p3").computed == 143
    assert report.entry("g5_certified_lower_bound").computed == 7
    # a budget-skipped chi row would still leave report.passed true
    for name, chi in [("chi_g4_d3", 5), ("chi_g5_d3", 7)]:
        assert report.entry(name).status is Status.PASS
        assert report.entry(name).computed == chi


@pytest.mark.slow
def test_family_properties_pass():
    assert run_suite(SuiteSpec(SuiteName.FAMILY_PROPERTIES)).passed


@pytest.mark.slow
def test_decomp_checks_keep_parts_connected_and_flat(small_sweeps):
    report = run_suite(SuiteSpec(SuiteName.DECOMP_CHECKS))
    for entry in report.entries:
        if entry.name.endswith(("_connected", "_flat")):
            assert entry.status is Status.PASS, entry.name
    assert report.entry("optimal_path_ball").computed == 0
