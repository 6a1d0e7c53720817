"""Time and node budgets shared by the exact search kernels."""

import time
from typing import Any, Optional

from loguru import logger

from app.config import settings

logger = logger.bind(name=__name__)


class BudgetExceededError(Exception):
    """Error raised when an exact search runs out of budget.

    The best result found so far travels with the error so that callers can
    downgrade to bounds instead of losing the work.
    """

    def __init__(self, operation: str, best: Any = None, lower_bound: Optional[int] = None) -> None:
        """Initialize the error.

        Args:
            operation: Name of the search that was interrupted
            best: Best-so-far result (upper bound witness), if any
            lower_bound: Certified lower bound known at interruption, if any
        """
        self.operation = operation
        self.best = best
        self.lower_bound = lower_bound
        super().__init__(f"Budget exceeded in {operation}")


class SearchBudget:
    """Deadline plus optional node cap, polled by search loops.

    The clock is read only every ``check_interval`` ticks.
    """

    def __init__(
        self,
        time_limit_ms: Optional[int] = None,
        node_limit: Optional[int] = None,
        check_interval: Optional[int] = None,
    ) -> None:
        self.time_limit_ms = time_limit_ms
        self.node_limit = node_limit
        self.check_interval = check_interval or settings.search.check_interval
        self.deadline = None if time_limit_ms is None else time.monotonic() + time_limit_ms / 1000.0
        self.nodes = 0
        self._expired = False

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        """Budget that never expires."""
        return cls()

    @classmethod
    def from_ms(cls, time_limit_ms: Optional[int], default_ms: int) -> "SearchBudget":
        """Build a budget from an optional CLI value, falling back to a settings default."""
        return cls(time_limit_ms=default_ms if time_limit_ms is None else time_limit_ms)

    def tick(self) -> bool:
        """Count one search node.

        Returns:
            True once the budget is exhausted (and on every later call)
        """
        if self._expired:
            return True
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self._expired = True
        elif self.deadline is not None and self.nodes % self.check_interval == 0:
            self._expired = time.monotonic() >= self.deadline
        if self._expired:
            logger.warning(f"Search budget exhausted after {self.nodes} nodes")
        return self._expired

    @property
    def expired(self) -> bool:
        return self._expired
