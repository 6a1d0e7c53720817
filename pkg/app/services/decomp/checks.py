"""Separating numbers, width and flatness of a decomposition."""

from typing import FrozenSet, List, Tuple

import networkx as nx
from loguru import logger

from app.services.graph_core import Graph
from app.services.orderings.access import restricted_bfs

from .exceptions import InvalidPartitionError
from .models import Decomposition, DecompositionCheck, FlatCheck, FlatnessProfile, FlatViolation, WidthMode

logger = logger.bind(name=__name__)


def _residual_components(g: Graph, removed: FrozenSet[int]) -> List[FrozenSet[int]]:
    kept = [v for v in g.vertices if v not in removed]
    return [frozenset(c) for c in nx.connected_components(g.nx_graph.subgraph(kept))]


def _touches(g: Graph, source: FrozenSet[int], target: FrozenSet[int]) -> bool:
    nbrs = g.neighbour_sets
    return any(nbrs[v] & target for v in source)


def separating_number(g: Graph, d: Decomposition, i: int, component: FrozenSet[int]) -> int:
    """Number of parts j <= i receiving an edge from the component outside H_j."""
    return sum(1 for j in range(1, i + 1) if _touches(g, component - d.parts[j - 1], d.parts[j - 1]))


def check_decomposition(g: Graph, d: Decomposition, mode: WidthMode = WidthMode.AS_PRINTED) -> DecompositionCheck:
    """Connectivity of the parts and the widths w_i and W.

    Args:
        g: Input graph
        d: Decomposition of g's vertex set
        mode: AS_PRINTED takes components after removing the parts before i;
            CLOSED_REMOVAL removes H_i as well

    Returns:
        DecompositionCheck with w_1..w_l and W = max w_i (0 when nothing survives)

    Raises:
        InvalidPartitionError: If d does not partition V(g)
    """
    _require_same_size(g, d)
    connected = all(nx.is_connected(g.nx_graph.subgraph(part)) for part in d.parts)
    widths = []
    removed: FrozenSet[int] = frozenset()
    for i, part in enumerate(d.parts, start=1):
        if mode is WidthMode.CLOSED_REMOVAL:
            removed = removed | part
            components = _residual_components(g, removed)
        else:
            components = _residual_components(g, removed)
            removed = removed | part
        widths.append(max((separating_number(g, d, i, c) for c in components), default=0))
    width = max(widths, default=0)
    logger.debug(f"Decomposition of {d.length} parts: widths {widths}, W={width} ({mode.value})")
    return DecompositionCheck(connected=connected, widths=tuple(widths), width=width, mode=mode)


def _require_same_size(g: Graph, d: Decomposition) -> None:
    if d.n != g.n:
        raise InvalidPartitionError(f"decomposition covers {d.n} vertices, graph has {g.n}")


def _ball_counts(g: Graph, d: Decomposition, k_max: int) -> List[Tuple[int, int, List[int]]]:
    """(i, v, counts) where counts[k] = |N^k[v] ∩ H_i| inside G minus earlier parts."""
    rows = []
    alive = [False] + [True] * g.n
    for i, part in enumerate(d.parts, start=1):
        for v in sorted(u for u in g.vertices if alive[u]):
            dist = restricted_bfs(g.adjacency, v, alive, k_max)
            counts = [0] * (k_max + 1)
            for u, du in dist.items():
                if u in part:
                    counts[du] += 1
            for k in range(1, k_max + 1):
                counts[k] += counts[k - 1]
            rows.append((i, v, counts))
        for u in part:
            alive[u] = False
    return rows


def check_flat(g: Graph, d: Decomposition, f: FlatnessProfile, k_max: int) -> FlatCheck:
    """Check |N^k[v] ∩ V(H_i)| <= f(k) in G minus the parts before i, for k <= k_max.

    Returns:
        FlatCheck with the first violation in (i, v, k) order
    """
    _require_same_size(g, d)
    for i, v, counts in _ball_counts(g, d, k_max):
        for k, count in enumerate(counts):
            if count > f(k):
                return FlatCheck(flat=False, violation=FlatViolation(i, v, k, count, f(k)))
    return FlatCheck(flat=True)


def flatness_profile(g: Graph, d: Decomposition, k_max: int) -> FlatnessProfile:
    """Smallest profile for which d is flat, tabulated for k = 0..k_max."""
    _require_same_size(g, d)
    best = [1] * (k_max + 1)
    for _, _, counts in _ball_counts(g, d, k_max):
        best = [max(x, y) for x, y in zip(best, counts)]
    return FlatnessProfile.from_table(best)
