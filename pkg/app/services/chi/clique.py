"""Clique number oracle: greedy seed plus colour-bounded branch and bound."""

from typing import List, Optional, Tuple

from loguru import logger

from app.config import settings
from app.services.budget import SearchBudget
from app.services.graph_core import Graph

from .models import CliqueResult

logger = logger.bind(name=__name__)


class _Interrupted(Exception):
    pass


def greedy_clique(h: Graph) -> Tuple[int, ...]:
    """Largest clique found by greedy growth from every start vertex.

    Starts are tried by decreasing degree; each step adds the candidate with
    most neighbours among the remaining candidates, ties by lowest id.
    """
    best: Tuple[int, ...] = ()
    nbrs = h.neighbour_sets
    for start in sorted(h.vertices, key=lambda v: (-h.degree(v), v)):
        if h.degree(start) + 1 <= len(best):
            break
        clique = [start]
        candidates = set(nbrs[start])
        while candidates:
            v = min(candidates, key=lambda u: (-len(nbrs[u] & candidates), u))
            clique.append(v)
            candidates &= nbrs[v]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def _colour_sort(candidates: int, masks: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy colour classes over a bitset; returns vertices and their class index."""
    order: List[int] = []
    bounds: List[int] = []
    colour = 0
    remaining = candidates
    while remaining:
        colour += 1
        available = remaining
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~masks[v] & ~low
            remaining &= ~low
            order.append(v)
            bounds.append(colour)
    return order, bounds


def clique_number(h: Graph, budget: Optional[SearchBudget] = None) -> CliqueResult:
    """Exact clique number with a witness clique.

    Args:
        h: Input graph
        budget: Search budget; defaults to the configured clique budget

    Returns:
        CliqueResult; when the budget runs out, ``exact`` is False and the value
        is the best clique found, a certified lower bound
    """
    if budget is None:
        budget = SearchBudget(time_limit_ms=settings.search.clique_time_limit_ms)
    if h.n == 0:
        return CliqueResult(value=0, witness=(), exact=True, upper_bound=0)

    masks = [0] * (h.n + 1)
    for v in h.vertices:
        for u in h.neighbours(v):
            masks[v] |= 1 << u

    best: List[int] = list(greedy_clique(h))
    all_vertices = sum(1 << v for v in h.vertices)
    _, initial_bounds = _colour_sort(all_vertices, masks)
    upper = max(initial_bounds)

    def expand(clique: List[int], candidates: int) -> None:
        nonlocal best
        if budget.tick():
            raise _Interrupted
        order, bounds = _colour_sort(candidates, masks)
        for index in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[index] <= len(best):
                return
            v = order[index]
            clique.append(v)
            narrowed = candidates & masks[v]
            if narrowed:
                expand(clique, narrowed)
            elif len(clique) > len(best):
                best = clique[:]
                logger.debug(f"Clique incumbent improved to {len(best)}")
            clique.pop()
            candidates &= ~(1 << v)

    try:
        if len(best) < upper:
            expand([], all_vertices)
    except _Interrupted:
        logger.warning(f"Clique search interrupted; best clique has {len(best)} vertices")
        return CliqueResult(value=len(best), witness=tuple(sorted(best)), exact=False, upper_bound=upper)
    return CliqueResult(value=len(best), witness=tuple(sorted(best)), exact=True, upper_bound=len(best))
