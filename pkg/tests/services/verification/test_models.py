"""Tests for suite selection."""

import pytest

from app.services.verification import InvalidSuiteSpecError, SuiteName, SuiteSpec, UnknownSuiteError


@pytest.mark.parametrize("text", ["order-sandwich", "ORDER_SANDWICH"])
def test_parse_value_or_member_name(text):
    assert SuiteName.parse(text) is SuiteName.ORDER_SANDWICH


def test_parse_unknown_suite():
    with pytest.raises(UnknownSuiteError) as excinfo:
        SuiteName.parse("everything")
    assert excinfo.value.name == "everything"
    assert str(excinfo.value) == (
        "Unknown suite 'everything'; expected one of paper-table, family-properties, "
        "coloring-properties, order-sandwich, decomp-checks"
    )


def test_spec_defaults_to_configured_seed():
    spec = SuiteSpec(SuiteName.PAPER_TABLE)
    assert spec.seed == 20170419
    assert spec.budget_ms is None


@pytest.mark.parametrize("kwargs,field", [({"budget_ms": 0}, "budget_ms"), ({"seed": -1}, "seed")])
def test_spec_rejects_bad_values(kwargs, field):
    with pytest.raises(InvalidSuiteSpecError) as excinfo:
        SuiteSpec(SuiteName.PAPER_TABLE, **kwargs)
    assert excinfo.value.field == field
