"""Data models for graphs and distance tables."""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

import networkx as nx

from .exceptions import InvalidGraphError, VertexRangeError

Edge = Tuple[int, int]

# Sentinels. Distances across components and odd girth of bipartite graphs
# have no integer value.
UNREACHABLE = None
BIPARTITE = None
ALL_ODD = None


class UnionMode(Enum):
    """Which relation an odd union is taken over."""

    DISTANCE = "distance"
    PATH = "path"


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n.

    Edges are stored as ordered pairs (u, v) with u < v. Labels are optional
    role names and take no part in equality.
    """

    n: int
    edges: FrozenSet[Edge]
    labels: Dict[int, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"self-loop at {u}")
            if u > v:
                raise InvalidGraphError(f"edge ({u}, {v}) is not normalised")
            if u < 1 or v > self.n:
                raise InvalidGraphError(f"edge ({u}, {v}) outside 1..{self.n}")
        for v in self.labels:
            if not 1 <= v <= self.n:
                raise InvalidGraphError(f"label on vertex {v} outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Optional[Dict[int, str]] = None) -> "Graph":
        """Build a graph from edges in either orientation; duplicates collapse."""
        return cls(n=n, edges=frozenset(normalize_edge(u, v) for u, v in edges), labels=dict(labels or {}))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n=n, edges=frozenset())

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise VertexRangeError(v, self.n)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbour tuples; index 0 is unused."""
        adj = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbour_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbour_sets[u]

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def sorted_edges(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """networkx view used for component and distance queries. Do not mutate."""
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edges)
        return h

    @cached_property
    def distances(self) -> Dict[int, Dict[int, int]]:
        """All finite pairwise distances, keyed by source."""
        return {u: dict(d) for u, d in nx.all_pairs_shortest_path_length(self.nx_graph)}

    def distance(self, u: int, v: int) -> Optional[int]:
        return self.distances[u].get(v, UNREACHABLE)

    def with_labels(self, labels: Dict[int, str]) -> "Graph":
        return Graph(n=self.n, edges=self.edges, labels=dict(labels))


@dataclass(frozen=True)
class DistanceTable:
    """Distances from one source, truncated at a radius."""

    source: int
    radius: int
    dist: Dict[int, int]

    def get(self, v: int) -> Optional[int]:
        """Distance to v, or UNREACHABLE when v lies beyond the radius."""
        return self.dist.get(v, UNREACHABLE)

    def __contains__(self, v: int) -> bool:
        return v in self.dist

    def within(self, k: int) -> FrozenSet[int]:
        return frozenset(v for v, d in self.dist.items() if d <= k)
