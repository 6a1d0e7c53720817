"""Verification suites and bound-report rendering."""

from .corpus import random_graphs, random_order, sweep_rng
from .exceptions import InvalidSuiteSpecError, ReportParseError, UnknownSuiteError, VerificationError
from .models import ReportFormat, SuiteName, SuiteSpec
from .report import TSV_COLUMNS, emit_report, parse_jsonl_report
from .suites import SuiteRunner, run_suite

__all__ = [
    "InvalidSuiteSpecError",
    "ReportFormat",
    "ReportParseError",
    "SuiteName",
    "SuiteRunner",
    "SuiteSpec",
    "TSV_COLUMNS",
    "UnknownSuiteError",
    "VerificationError",
    "emit_report",
    "parse_jsonl_report",
    "random_graphs",
    "random_order",
    "run_suite",
    "sweep_rng",
]
