"""Chromatic number oracle: saturation-degree branch and bound.

Vertices are selected by highest saturation, ties by degree then lowest id.
The seed clique is precoloured 1..|K|, and the search stops as soon as a
colouring meets the best certified lower bound.
"""

from typing import List, Optional

from loguru import logger

from app.config import settings
from app.services.budget import SearchBudget
from app.services.coloring.models import Coloring
from app.services.graph_core import Graph

from .clique import greedy_clique
from .exceptions import InconsistentBoundError
from .models import ChiResult, ChiStatus

logger = logger.bind(name=__name__)


class _Interrupted(Exception):
    pass


def dsatur_greedy(h: Graph) -> Coloring:
    """One DSATUR pass without backtracking."""
    colour = [0] * (h.n + 1)
    seen = [set() for _ in range(h.n + 1)]
    uncoloured = set(h.vertices)
    while uncoloured:
        v = max(uncoloured, key=lambda u: (len(seen[u]), h.degree(u), -u))
        c = 1
        while c in seen[v]:
            c += 1
        colour[v] = c
        uncoloured.discard(v)
        for u in h.neighbours(v):
            seen[u].add(c)
    return Coloring.from_list(colour[1:])


class _SaturationState:
    """Colour counts per vertex, updated incrementally on (un)assignment."""

    def __init__(self, h: Graph) -> None:
        self.h = h
        self.colour = [0] * (h.n + 1)
        self.counts = [[0] * (h.n + 2) for _ in range(h.n + 1)]
        self.saturation = [0] * (h.n + 1)
        self.coloured = 0

    def assign(self, v: int, c: int) -> None:
        self.colour[v] = c
        self.coloured += 1
        for u in self.h.neighbours(v):
            row = self.counts[u]
            if row[c] == 0:
                self.saturation[u] += 1
            row[c] += 1

    def unassign(self, v: int, c: int) -> None:
        self.colour[v] = 0
        self.coloured -= 1
        for u in self.h.neighbours(v):
            row = self.counts[u]
            row[c] -= 1
            if row[c] == 0:
                self.saturation[u] -= 1

    def select(self) -> int:
        best_v, best_key = 0, None
        for v in self.h.vertices:
            if self.colour[v] == 0:
                key = (self.saturation[v], self.h.degree(v), -v)
                if best_key is None or key > best_key:
                    best_v, best_key = v, key
        return best_v


def chromatic_number(
    h: Graph,
    budget: Optional[SearchBudget] = None,
    lower_bound: Optional[int] = None,
    lower_bound_source: str = "structure",
) -> ChiResult:
    """Exact chromatic number by DSATUR branch and bound.

    Args:
        h: Input graph
        budget: Search budget; defaults to the configured chi budget
        lower_bound: Optional certified lower bound from outside the search
        lower_bound_source: Provenance of ``lower_bound``, reported in the result

    Returns:
        ChiResult, EXACT when the search finished or a colouring met the lower
        bound, BOUNDS(lb, ub) when the budget ran out first

    Raises:
        InconsistentBoundError: If the supplied lower bound contradicts a found colouring
    """
    if budget is None:
        budget = SearchBudget(time_limit_ms=settings.search.chi_time_limit_ms)
    if h.n == 0:
        return ChiResult(0, 0, Coloring(assignment={}), (), ChiStatus.EXACT, "empty")

    clique = greedy_clique(h)
    lb, source = len(clique), "clique"
    if lower_bound is not None and lower_bound > lb:
        lb, source = lower_bound, lower_bound_source

    seed = dsatur_greedy(h)
    best = seed.palette_size
    best_colour: List[int] = [0] + [seed[v] for v in h.vertices]
    if best < lb:
        raise InconsistentBoundError(lb, best, source)
    logger.debug(f"chi seed: lb={lb} ({source}), ub={best} on {h.n} vertices")

    if best > lb:
        state = _SaturationState(h)
        for i, v in enumerate(clique, start=1):
            state.assign(v, i)

        def search(used: int) -> bool:
            nonlocal best, best_colour
            if budget.tick():
                raise _Interrupted
            if state.coloured == h.n:
                best, best_colour = used, state.colour[:]
                logger.debug(f"chi incumbent improved to {best}")
                return best <= lb
            v = state.select()
            row = state.counts[v]
            for c in range(1, used + 2):
                if c >= best:
                    break
                if row[c]:
                    continue
                state.assign(v, c)
                if search(max(used, c)):
                    return True
                state.unassign(v, c)
            return False

        try:
            search(len(clique))
        except _Interrupted:
            logger.warning(f"chi search interrupted: bounds [{lb}, {best}]")
            return ChiResult(lb, best, Coloring.from_list(best_colour[1:]), clique, ChiStatus.BOUNDS, source)
        if best < lb:
            raise InconsistentBoundError(lb, best, source)
        if best > lb:
            # completed search proves the incumbent optimal
            source = "exhaustive"
        lb = best

    return ChiResult(lb, best, Coloring.from_list(best_colour[1:]), clique, ChiStatus.EXACT, source)


def exhaustive_k_colorable(h: Graph, k: int) -> Optional[Coloring]:
    """Plain backtracking k-colourability test in vertex-id order.

    Returns:
        A proper colouring with colours in 1..k, or None
    """
    colour = [0] * (h.n + 1)

    def place(v: int) -> bool:
        if v > h.n:
            return True
        taken = {colour[u] for u in h.neighbours(v) if u < v}
        # a new vertex may open at most one fresh colour
        limit = min(k, max(colour[:v], default=0) + 1)
        for c in range(1, limit + 1):
            if c not in taken:
                colour[v] = c
                if place(v + 1):
                    return True
        colour[v] = 0
        return False

    if h.n == 0:
        return Coloring(assignment={})
    if k < 1:
        return None
    return Coloring.from_list(colour[1:]) if place(1) else None
