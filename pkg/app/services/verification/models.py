"""Suite selection and report formats."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from app.config import settings

from .exceptions import InvalidSuiteSpecError, UnknownSuiteError


class SuiteName(Enum):
    PAPER_TABLE = "paper-table"
    FAMILY_PROPERTIES = "family-properties"
    COLORING_PROPERTIES = "coloring-properties"
    ORDER_SANDWICH = "order-sandwich"
    DECOMP_CHECKS = "decomp-checks"

    @classmethod
    def parse(cls, text: str) -> "SuiteName":
        """Accept either the value (``paper-table``) or the member name (``PAPER_TABLE``)."""
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise UnknownSuiteError(text, [m.value for m in cls])


class ReportFormat(Enum):
    TSV = "tsv"
    JSONL = "jsonl"


@dataclass(frozen=True)
class SuiteSpec:
    """A suite run: which suite, the per-check budget and the sweep seed.

    Attributes:
        name: Suite to run
        budget_ms: Time limit for every exact search; None uses each
            search's configured default
        seed: Seed of the randomized sweeps
    """

    name: SuiteName
    budget_ms: Optional[int] = None
    seed: int = field(default_factory=lambda: settings.sweeps.seed)

    def __post_init__(self) -> None:
        if self.budget_ms is not None and self.budget_ms <= 0:
            raise InvalidSuiteSpecError("budget_ms", self.budget_ms)
        if self.seed < 0:
            raise InvalidSuiteSpecError("seed", self.seed)
