"""Small graph builders and hypothesis strategies shared by the tests."""

from itertools import combinations
from typing import Tuple

from hypothesis import strategies as st

from app.services.graph_core import Graph
from app.services.orderings import LinearOrder


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def star(leaves: int) -> Graph:
    """Centre 1, leaves 2..leaves+1."""
    return Graph.from_edges(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


@st.composite
def graphs(draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graphs_with_order(draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 8) -> Tuple[Graph, LinearOrder]:
    g = draw(graphs(min_vertices=min_vertices, max_vertices=max_vertices))
    perm = draw(st.permutations(list(g.vertices)))
    return g, LinearOrder.of(perm)


@st.composite
def bipartite_graphs(draw: st.DrawFn, max_side: int = 5) -> Graph:
    a = draw(st.integers(min_value=1, max_value=max_side))
    b = draw(st.integers(min_value=1, max_value=max_side))
    pairs = [(u, a + w) for u in range(1, a + 1) for w in range(1, b + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(a + b, chosen)
