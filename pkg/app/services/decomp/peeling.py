"""Best-effort construction of a flat decomposition by peeling shortest paths."""

from typing import List

from loguru import logger

from app.services.graph_core import Graph
from app.services.orderings.access import restricted_bfs

from .models import Decomposition

logger = logger.bind(name=__name__)


def peel_shortest_paths(g: Graph) -> Decomposition:
    """Repeatedly remove a longest shortest path of the residual graph.

    The endpoints are the lexicographically least pair at maximum finite
    distance; the path steps back through the smallest predecessor. Every
    part is a shortest path of the graph left after removing earlier parts,
    so the result is connected and (2k+1)-flat. The width is not controlled.
    """
    adj = g.adjacency
    alive = [False] + [True] * g.n
    remaining = g.n
    parts: List[List[int]] = []
    while remaining:
        best = None
        for u in g.vertices:
            if not alive[u]:
                continue
            dist = restricted_bfs(adj, u, alive, g.n)
            far = max(dist.values())
            v = min(w for w, dw in dist.items() if dw == far)
            if best is None or far > best[0]:
                best = (far, u, v, dist)
        _, u, v, dist = best
        path = [v]
        while path[-1] != u:
            cur = path[-1]
            path.append(min(w for w in adj[cur] if alive[w] and dist.get(w) == dist[cur] - 1))
        path.reverse()
        for w in path:
            alive[w] = False
        remaining -= len(path)
        parts.append(path)
        logger.debug(f"Peeled part {len(parts)}: {path}")
    return Decomposition.of(g.n, parts)
