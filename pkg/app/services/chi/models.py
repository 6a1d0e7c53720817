"""Data models for chromatic and clique number results."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from app.services.coloring.models import Coloring


class ChiStatus(Enum):
    """Whether a result is exact or only bracketed."""

    EXACT = "EXACT"
    BOUNDS = "BOUNDS"


@dataclass(frozen=True)
class ChiResult:
    """Chromatic number (or bounds on it) with witnesses.

    ``value`` equals ``upper_bound``; it is the chromatic number only when the
    status is EXACT.
    """

    lower_bound: int
    upper_bound: int
    witness: Coloring
    lower_bound_witness: Tuple[int, ...]
    status: ChiStatus
    lower_bound_source: str = "clique"

    @property
    def value(self) -> int:
        return self.upper_bound

    @property
    def exact(self) -> bool:
        return self.status is ChiStatus.EXACT

    def __str__(self) -> str:
        if self.exact:
            return str(self.value)
        return f"BOUNDS({self.lower_bound},{self.upper_bound})"


@dataclass(frozen=True)
class CliqueResult:
    """Clique number (or a lower bound on it) with a witness clique."""

    value: int
    witness: Tuple[int, ...]
    exact: bool
    upper_bound: Optional[int] = None

    def __str__(self) -> str:
        return str(self.value) if self.exact else f"BOUNDS({self.value},{self.upper_bound})"
