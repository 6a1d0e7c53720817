"""Heuristic linear orders for inputs too large for the exact search."""

from typing import Dict, List

from app.services.graph_core import Graph

from .models import LinearOrder, OrderStrategy


def _degeneracy(g: Graph) -> List[int]:
    degree = {v: g.degree(v) for v in g.vertices}
    removed: List[int] = []
    alive = set(g.vertices)
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        alive.discard(v)
        removed.append(v)
        for u in g.neighbours(v):
            if u in alive:
                degree[u] -= 1
    return removed[::-1]


def _components_from(g: Graph, root: int) -> List[int]:
    """Component start vertices: root first, then the smallest unvisited ids."""
    return [root] + [v for v in g.vertices if v != root]


def _bfs_layers(g: Graph, root: int) -> List[int]:
    order: List[int] = []
    seen = set()
    for start in _components_from(g, root):
        if start in seen:
            continue
        seen.add(start)
        layer = [start]
        while layer:
            order.extend(layer)
            following = set()
            for v in layer:
                following.update(u for u in g.neighbours(v) if u not in seen)
            seen.update(following)
            layer = sorted(following)
    return order


def _dfs_depths(g: Graph, root: int) -> List[int]:
    depth: Dict[int, int] = {}
    for start in _components_from(g, root):
        if start in depth:
            continue
        depth[start] = 0
        stack = [(start, iter(g.neighbours(start)))]
        while stack:
            v, children = stack[-1]
            for u in children:
                if u not in depth:
                    depth[u] = depth[v] + 1
                    stack.append((u, iter(g.neighbours(u))))
                    break
            else:
                stack.pop()
    return sorted(g.vertices, key=lambda v: (depth[v], v))


def heuristic_order(g: Graph, strategy: OrderStrategy, root: int = 1) -> LinearOrder:
    """Build an order by the given strategy.

    Args:
        g: Input graph
        strategy: DEGENERACY (min-degree removal, reversed), BFS_ROOT (layers
            from root, ascending id within a layer) or TD_DFS (depth in a
            depth-first tree, shallower first)
        root: Start vertex for BFS_ROOT and TD_DFS

    Returns:
        LinearOrder over all vertices of g
    """
    if g.n == 0:
        return LinearOrder(())
    g.check_vertex(root)
    if strategy is OrderStrategy.DEGENERACY:
        return LinearOrder.of(_degeneracy(g))
    if strategy is OrderStrategy.BFS_ROOT:
        return LinearOrder.of(_bfs_layers(g, root))
    return LinearOrder.of(_dfs_depths(g, root))
