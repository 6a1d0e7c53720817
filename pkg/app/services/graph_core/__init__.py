"""Graph representation, graph files, distances and derived graphs."""

from .derived import (
    exact_distance_graph,
    exact_power_graph,
    odd_girth,
    odd_union_graph,
    power_graph,
    simple_path_lengths,
)
from .distances import (
    all_pairs_distances,
    bounded_distances,
    from_networkx,
    induced_subgraph,
    is_bipartite,
    max_degree,
    neighbourhood,
    to_networkx,
    union,
)
from .io import format_graph, parse_graph, read_graph, write_graph
from .models import ALL_ODD, BIPARTITE, UNREACHABLE, DistanceTable, Graph, UnionMode

__all__ = [
    "ALL_ODD",
    "BIPARTITE",
    "UNREACHABLE",
    "DistanceTable",
    "Graph",
    "UnionMode",
    "all_pairs_distances",
    "bounded_distances",
    "exact_distance_graph",
    "exact_power_graph",
    "format_graph",
    "from_networkx",
    "induced_subgraph",
    "is_bipartite",
    "max_degree",
    "neighbourhood",
    "odd_girth",
    "odd_union_graph",
    "parse_graph",
    "power_graph",
    "read_graph",
    "simple_path_lengths",
    "to_networkx",
    "union",
    "write_graph",
]
