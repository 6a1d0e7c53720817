"""Derived graphs: exact distance graphs, exact powers, powers and odd unions.

Pairs in different components have no finite distance and never become
edges of any derived graph.
"""

from typing import Dict, Optional, Set

from loguru import logger

from .distances import bounded_distances
from .exceptions import InvalidParameterError
from .models import ALL_ODD, BIPARTITE, Edge, Graph, UnionMode

logger = logger.bind(name=__name__)


def _require_positive(p: int) -> None:
    if p < 1:
        raise InvalidParameterError("p", p, "a positive integer")


def _distance_edges(g: Graph, low: int, high: int, odd_only: bool = False) -> Set[Edge]:
    edges: Set[Edge] = set()
    for u in g.vertices:
        for v, d in bounded_distances(g, u, high).dist.items():
            if u < v and low <= d and (not odd_only or d % 2 == 1):
                edges.add((u, v))
    return edges


def simple_path_lengths(g: Graph, max_length: int) -> Dict[Edge, int]:
    """Bitmask of achievable simple-path lengths for every connected pair.

    Bit ``l`` of the mask for (u, v), u < v, is set iff some simple u,v-path
    has exactly l edges, for l <= max_length. Exponential in the worst case;
    meant for sparse inputs and small max_length.
    """
    masks: Dict[Edge, int] = {}
    adj = g.adjacency
    on_path = [False] * (g.n + 1)

    def walk(source: int, x: int, depth: int) -> None:
        if depth and source < x:
            key = (source, x)
            masks[key] = masks.get(key, 0) | (1 << depth)
        if depth == max_length:
            return
        on_path[x] = True
        for y in adj[x]:
            if not on_path[y]:
                walk(source, y, depth + 1)
        on_path[x] = False

    for s in g.vertices:
        walk(s, s, 0)
    logger.debug(f"Enumerated simple paths up to length {max_length} on {g.n} vertices: {len(masks)} pairs")
    return masks


def exact_distance_graph(g: Graph, p: int) -> Graph:
    """Graph on V(g) joining u, v iff their distance is exactly p."""
    _require_positive(p)
    if p == 1:
        return g
    return Graph(n=g.n, edges=frozenset(_distance_edges(g, p, p)), labels=dict(g.labels))


def exact_power_graph(g: Graph, p: int) -> Graph:
    """Graph on V(g) joining u, v iff a simple path with exactly p edges joins them."""
    _require_positive(p)
    if p == 1:
        return g
    bit = 1 << p
    edges = frozenset(e for e, mask in simple_path_lengths(g, p).items() if mask & bit)
    return Graph(n=g.n, edges=edges, labels=dict(g.labels))


def power_graph(g: Graph, p: int) -> Graph:
    """Graph on V(g) joining u, v iff 1 <= d(u, v) <= p."""
    _require_positive(p)
    if p == 1:
        return g
    return Graph(n=g.n, edges=frozenset(_distance_edges(g, 1, p)), labels=dict(g.labels))


def odd_union_graph(g: Graph, p: Optional[int], mode: UnionMode = UnionMode.DISTANCE) -> Graph:
    """Union of the exact distance (or exact power) graphs over odd i <= p.

    ``p=ALL_ODD`` takes every odd i; in DISTANCE mode that is the graph joining
    pairs at odd finite distance.

    Raises:
        InvalidParameterError: If p is even or not positive
    """
    if p is not ALL_ODD:
        _require_positive(p)
        if p % 2 == 0:
            raise InvalidParameterError("p", p, "an odd positive integer")
    if mode is UnionMode.DISTANCE:
        high = g.n if p is ALL_ODD else p
        edges = _distance_edges(g, 1, max(high, 1), odd_only=True)
    else:
        high = max(g.n - 1, 1) if p is ALL_ODD else p
        odd_bits = sum(1 << i for i in range(1, high + 1, 2))
        edges = {e for e, mask in simple_path_lengths(g, high).items() if mask & odd_bits}
    return Graph(n=g.n, edges=frozenset(edges), labels=dict(g.labels))


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or BIPARTITE when there is none.

    From every source, an edge between two vertices at equal depth d closes an
    odd closed walk of length 2d+1; the minimum over sources is attained on a
    shortest odd cycle.
    """
    best: Optional[int] = BIPARTITE
    for s in g.vertices:
        dist = bounded_distances(g, s, g.n).dist
        for u, v in g.edges:
            du = dist.get(u)
            if du is not None and du == dist.get(v):
                length = 2 * du + 1
                if best is BIPARTITE or length < best:
                    best = length
    return best
