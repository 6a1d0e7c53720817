"""Contraction of a connected decomposition and the part-major vertex order."""

import networkx as nx
from loguru import logger

from app.services.graph_core import Graph
from app.services.orderings import LinearOrder

from .checks import _require_same_size
from .exceptions import DisconnectedPartError
from .models import Decomposition

logger = logger.bind(name=__name__)


def _require_connected(g: Graph, d: Decomposition) -> None:
    for index, part in enumerate(d.parts, start=1):
        if not nx.is_connected(g.nx_graph.subgraph(part)):
            raise DisconnectedPartError(index)


def contract(g: Graph, d: Decomposition) -> Graph:
    """Contract every part to a single vertex.

    Vertex i of the result stands for H_i; i ~ j iff some edge of g joins
    H_i and H_j.

    Raises:
        DisconnectedPartError: If some part does not induce a connected subgraph
    """
    _require_same_size(g, d)
    _require_connected(g, d)
    owner = d.part_of
    edges = {(min(owner[u], owner[v]), max(owner[u], owner[v])) for u, v in g.edges if owner[u] != owner[v]}
    logger.debug(f"Contracted {g.n} vertices into {d.length} parts with {len(edges)} edges")
    return Graph.from_edges(d.length, edges)


def flatbound_order(g: Graph, d: Decomposition) -> LinearOrder:
    """All of H_1, then H_2 and so on, ascending vertex id inside a part."""
    _require_same_size(g, d)
    return LinearOrder.of(v for part in d.parts for v in sorted(part))
