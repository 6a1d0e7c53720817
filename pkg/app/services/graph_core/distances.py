"""Distance queries and small graph utilities."""

from typing import Dict, FrozenSet, Iterable

import networkx as nx

from .exceptions import InvalidGraphError, InvalidParameterError
from .models import DistanceTable, Graph


def bounded_distances(g: Graph, source: int, radius: int) -> DistanceTable:
    """Breadth-first distances from ``source`` up to ``radius``.

    Args:
        g: Input graph
        source: Source vertex
        radius: Cutoff; vertices farther away are absent from the table

    Returns:
        DistanceTable holding every vertex within the radius

    Raises:
        VertexRangeError: If the source is not a vertex of g
        InvalidParameterError: If the radius is negative
    """
    g.check_vertex(source)
    if radius < 0:
        raise InvalidParameterError("radius", radius, "a non-negative integer")
    dist = nx.single_source_shortest_path_length(g.nx_graph, source, cutoff=radius)
    return DistanceTable(source=source, radius=radius, dist=dict(dist))


def all_pairs_distances(g: Graph) -> Dict[int, Dict[int, int]]:
    """Finite distances between every pair, cached on the graph."""
    return g.distances


def neighbourhood(g: Graph, v: int, k: int, closed: bool = False) -> FrozenSet[int]:
    """The k-th neighbourhood: vertices other than v within distance k.

    With ``closed`` the vertex itself is included.
    """
    ball = bounded_distances(g, v, k).within(k)
    return ball if closed else ball - {v}


def max_degree(g: Graph) -> int:
    return g.max_degree


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.nx_graph)


def union(g: Graph, h: Graph) -> Graph:
    """Edge union of two graphs on the same vertex set; labels of g are kept."""
    if g.n != h.n:
        raise InvalidGraphError(f"union needs equal vertex sets, got {g.n} and {h.n}")
    return Graph(n=g.n, edges=g.edges | h.edges, labels=dict(g.labels))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered 1..k in ascending order."""
    kept = sorted(set(vertices))
    new_id = {v: i for i, v in enumerate(kept, start=1)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    labels = {new_id[v]: name for v, name in g.labels.items() if v in new_id}
    return Graph.from_edges(len(kept), edges, labels)


def to_networkx(g: Graph) -> nx.Graph:
    """Fresh networkx copy of g, labels stored as the ``label`` node attribute."""
    h = g.nx_graph.copy()
    nx.set_node_attributes(h, g.labels, "label")
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Convert a networkx graph, renumbering nodes 1..n in sorted node order.

    Nodes that are already the integers 1..n keep their ids.
    """
    if set(h.nodes) != set(range(1, h.number_of_nodes() + 1)):
        h = nx.convert_node_labels_to_integers(h, first_label=1, ordering="sorted")
    labels = {v: str(lbl) for v, lbl in h.nodes(data="label") if lbl is not None}
    edges = [(u, v) for u, v in h.edges if u != v]
    return Graph.from_edges(h.number_of_nodes(), edges, labels)
