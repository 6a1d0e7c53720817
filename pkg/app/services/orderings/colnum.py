"""Exact generalised colouring numbers by branch and bound over order prefixes."""

from typing import List, Optional, Tuple

import networkx as nx
from loguru import logger

from app.config import settings
from app.services.budget import BudgetExceededError, SearchBudget
from app.services.graph_core import Graph

from .access import AccessEvaluator, eval_colnum
from .heuristics import heuristic_order
from .models import AccessKind, AccessType, LinearOrder, OrderStrategy

logger = logger.bind(name=__name__)


class _Interrupted(Exception):
    pass


def _best_heuristic(g: Graph, kind: AccessKind) -> Tuple[int, LinearOrder]:
    best: Optional[Tuple[int, LinearOrder]] = None
    for strategy in OrderStrategy:
        L = heuristic_order(g, strategy)
        value = eval_colnum(g, L, kind)
        if best is None or value < best[0]:
            best = (value, L)
    return best


def exact_colnum(g: Graph, kind: AccessKind, budget: Optional[SearchBudget] = None) -> Tuple[int, LinearOrder]:
    """Minimum over all orders of eval_colnum, with the lexicographically least optimal order.

    Children of a prefix are tried in ascending vertex id. A prefix is cut as
    soon as the back-sets it fixes, or the back-set sizes it forces on
    unplaced vertices, reach the incumbent.

    Args:
        g: Input graph
        kind: Access kind and radius
        budget: Search budget; defaults to the configured colnum budget

    Returns:
        (value, witness order)

    Raises:
        BudgetExceededError: Carries the best (value, order) found so far as ``best``
    """
    if budget is None:
        budget = SearchBudget(time_limit_ms=settings.search.colnum_time_limit_ms)
    n = g.n
    if n == 0:
        return 1, LinearOrder(())
    radius = kind.effective_radius(n)
    heuristic_value, heuristic_L = _best_heuristic(g, kind)
    if radius == 0:
        return 1, LinearOrder.identity(n)

    # every access set contains the back-neighbours, so degeneracy bounds from below
    floor_cost = max(nx.core_number(g.nx_graph).values(), default=0)

    best_perm: Optional[List[int]] = None

    evaluator = AccessEvaluator(g, kind)
    forced = [0] * (n + 1)
    threshold = radius if kind.kind is AccessType.Q_WEAK else radius // 2 + 1
    placed = [False] * (n + 1)

    def forced_by(y: int) -> List[int]:
        """Unplaced vertices that y is guaranteed to reach once it sits in the prefix."""
        if kind.kind is AccessType.R_STRONG:
            return [v for v in g.neighbours(y) if not placed[v]]
        return [v for v, d in evaluator.dist[y].items() if v != y and d <= threshold]

    def search(depth: int, partial: int) -> bool:
        nonlocal best_cost, best_perm
        if budget.tick():
            raise _Interrupted
        if depth == n:
            best_cost = partial
            best_perm = list(evaluator.prefix)
            logger.debug(f"exact_colnum {kind}: incumbent {best_cost + 1}")
            return best_cost <= floor_cost
        for y in g.vertices:
            if placed[y]:
                continue
            if forced[y] >= best_cost:
                continue
            back = evaluator.place(y)
            placed[y] = True
            cost = max(partial, len(back))
            bumped = forced_by(y) if cost < best_cost else []
            for v in bumped:
                forced[v] += 1
            if cost < best_cost and all(forced[v] < best_cost for v in g.vertices if not placed[v]):
                if search(depth + 1, cost):
                    return True
            for v in bumped:
                forced[v] -= 1
            placed[y] = False
            evaluator.unplace()
        return False

    # costs are back-set sizes, one below the colouring number; seeding one above the
    # heuristic cost lets the search still reach the first optimal order
    best_cost = heuristic_value
    try:
        search(0, 0)
    except _Interrupted:
        if best_perm is None:
            fallback = (heuristic_value, heuristic_L)
        else:
            fallback = (best_cost + 1, LinearOrder.of(best_perm))
        logger.warning(f"exact_colnum {kind} interrupted; best so far {fallback[0]}")
        raise BudgetExceededError("exact_colnum", best=fallback, lower_bound=floor_cost + 1)

    if best_perm is None:
        # unreachable: the heuristic order itself has cost heuristic_value - 1
        return heuristic_value, heuristic_L
    return best_cost + 1, LinearOrder.of(best_perm)
