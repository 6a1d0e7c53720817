"""Tree-depth and tree-width oracles for small graphs."""

from typing import Dict, List, Optional

from loguru import logger

from app.config import settings
from app.services.budget import BudgetExceededError, SearchBudget
from app.services.graph_core import Graph

from .colnum import exact_colnum
from .models import AccessKind

logger = logger.bind(name=__name__)


class _Interrupted(Exception):
    pass


def _components(mask: int, masks: List[int]) -> List[int]:
    parts = []
    while mask:
        low = mask & -mask
        part = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier &= frontier - 1
            grown = masks[bit.bit_length() - 1] & mask & ~part
            part |= grown
            frontier |= grown
        parts.append(part)
        mask &= ~part
    return parts


def treedepth_exact(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Exact tree-depth: max over components, 1 + min over removed vertex when connected.

    Raises:
        BudgetExceededError: When the budget runs out; no bound is attached
    """
    if budget is None:
        budget = SearchBudget(time_limit_ms=settings.search.treedepth_time_limit_ms)
    masks = [0] * (g.n + 1)
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    memo: Dict[int, int] = {}

    def connected_td(part: int) -> int:
        if part in memo:
            return memo[part]
        if budget.tick():
            raise _Interrupted
        if part & (part - 1) == 0:
            return 1
        size = bin(part).count("1")
        best = size
        rest = part
        while rest:
            bit = rest & -rest
            rest &= rest - 1
            worst = 0
            for component in _components(part & ~bit, masks):
                worst = max(worst, connected_td(component))
                if worst + 1 >= best:
                    break
            best = min(best, worst + 1)
        memo[part] = best
        return best

    all_vertices = sum(1 << v for v in g.vertices)
    try:
        return max((connected_td(c) for c in _components(all_vertices, masks)), default=0)
    except _Interrupted:
        logger.warning(f"treedepth_exact interrupted after {len(memo)} memoised subsets")
        raise BudgetExceededError("treedepth_exact")


def treewidth_exact(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Tree-width as the strong colouring number at infinite radius minus one."""
    if g.n == 0:
        return -1
    value, _ = exact_colnum(g, AccessKind.strong(), budget)
    return value - 1
