"""Colourings of exact distance graphs from a distance-colouring order.

Odd p: colour y with a(mu(y)), where a is the greedy colouring against
D-back-sets of radius 2p-1 and mu(y) is the L-least vertex within distance
floor(p/2) of y.

Even p: colour y with the pair (a(mu(y)), c(beta(y))), where a uses radius 2p,
mu(y) is the L-least vertex within distance p/2, beta(y) is the least
neighbour of mu(y) within distance p/2-1 of y, and c numbers the neighbours of
mu(y) 1, 2, ... in ascending id. When that set is empty mu(y) = y, no vertex
sharing mu(y) lies at distance p from y, and beta(y) falls back to the least
neighbour of y. Isolated vertices take second coordinate 1.
"""

from typing import Dict, Tuple

from loguru import logger

from app.services.graph_core import Graph, bounded_distances
from app.services.orderings import AccessKind, LinearOrder

from .exceptions import ParityError
from .greedy import greedy_back_coloring
from .models import Coloring

logger = logger.bind(name=__name__)


def check_parity(procedure: str, p: int, odd: bool) -> None:
    if not isinstance(p, int) or p < 1 or (p % 2 == 1) != odd:
        raise ParityError(procedure, p, "odd" if odd else "even")


def _ball_minima(g: Graph, L: LinearOrder, radius: int) -> Dict[int, int]:
    return {y: L.minimum(bounded_distances(g, y, radius).dist) for y in g.vertices}


def color_exact_distance_odd(g: Graph, L: LinearOrder, p: int) -> Coloring:
    """Proper colouring of the exact distance-p graph for odd p.

    Uses at most eval_colnum(g, L, D_DIST radius 2p-1) colours.

    Raises:
        ParityError: If p is not an odd positive integer
    """
    check_parity("color_exact_distance_odd", p, odd=True)
    a = greedy_back_coloring(g, L, AccessKind.distance(2 * p - 1))
    mu = _ball_minima(g, L, p // 2)
    assignment = {y: a[mu[y]] for y in g.vertices}
    logger.debug(f"Odd exact-distance colouring p={p}: {len(set(assignment.values()))} colours")
    return Coloring(assignment=assignment, legend={c: c for c in set(assignment.values())})


def color_exact_distance_even(g: Graph, L: LinearOrder, p: int) -> Coloring:
    """Proper colouring of the exact distance-p graph for even p.

    Uses at most eval_colnum(g, L, D_DIST radius 2p) * max(Delta(g), 1) colours.

    Raises:
        ParityError: If p is not an even positive integer
    """
    check_parity("color_exact_distance_even", p, odd=False)
    half = p // 2
    a = greedy_back_coloring(g, L, AccessKind.distance(2 * p))
    mu = _ball_minima(g, L, half)
    labels: Dict[int, Tuple[int, int]] = {}
    for y in g.vertices:
        v = mu[y]
        inner = bounded_distances(g, y, half - 1).dist
        candidates = [b for b in g.neighbours(v) if b in inner]
        if candidates:
            index = g.neighbours(v).index(candidates[0]) + 1
        else:
            # mu(y) = y with no beta(y), isolated y included: reserved index 0
            index = 0
        labels[y] = (a[v], index)
    coloring = Coloring.from_labels(labels)
    logger.debug(f"Even exact-distance colouring p={p}: {coloring.palette_size} colours")
    return coloring
