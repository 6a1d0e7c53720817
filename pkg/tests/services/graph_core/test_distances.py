"""Tests for distance queries and graph utilities."""

import networkx as nx
import pytest

from app.services.graph_core import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    bounded_distances,
    from_networkx,
    induced_subgraph,
    is_bipartite,
    neighbourhood,
    to_networkx,
    union,
)
from app.services.graph_core.exceptions import InvalidGraphError, InvalidParameterError, VertexRangeError

from tests.helpers import cycle, path


def test_bounded_distances_on_path():
    table = bounded_distances(path(4), 1, 3)
    assert table.dist == {1: 0, 2: 1, 3: 2, 4: 3}
    assert table.radius == 3


def test_bounded_distances_cut_at_radius():
    """Vertices beyond the radius are absent and read as UNREACHABLE."""
    table = bounded_distances(cycle(6), 1, 2)
    assert table.dist == {1: 0, 2: 1, 6: 1, 3: 2, 5: 2}
    assert table.get(4) is UNREACHABLE
    assert 4 not in table
    assert table.within(1) == frozenset({1, 2, 6})


def test_bounded_distances_disconnected():
    table = bounded_distances(Graph.empty(2), 1, 5)
    assert table.dist == {1: 0}
    assert table.get(2) is UNREACHABLE


def test_bounded_distances_rejects_bad_arguments():
    with pytest.raises(VertexRangeError):
        bounded_distances(path(3), 4, 1)
    with pytest.raises(InvalidParameterError):
        bounded_distances(path(3), 1, -1)


def test_neighbourhood_open_and_closed():
    g = path(5)
    assert neighbourhood(g, 3, 1) == frozenset({2, 4})
    assert neighbourhood(g, 3, 1, closed=True) == frozenset({2, 3, 4})
    assert neighbourhood(g, 1, 0) == frozenset()


def test_union_of_graphs():
    triangle = union(path(3), Graph.from_edges(3, [(1, 3)]))
    assert triangle.edges == frozenset({(1, 2), (2, 3), (1, 3)})


def test_union_needs_equal_vertex_sets():
    with pytest.raises(InvalidGraphError):
        union(path(3), path(4))


def test_induced_subgraph_renumbers_in_ascending_order():
    """Kept vertices 2, 4, 5 become 1, 2, 3."""
    h = induced_subgraph(Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)], {5: "end"}), [5, 2, 4])
    assert h.n == 3
    assert h.edges == frozenset({(2, 3)})
    assert h.labels == {3: "end"}


def test_from_networkx_renumbers_zero_based_nodes():
    g = from_networkx(nx.path_graph(3))
    assert g == path(3)


def test_networkx_conversion_keeps_labels():
    g = Graph.from_edges(2, [(1, 2)], {2: "y"})
    h = to_networkx(g)
    assert h.nodes[2]["label"] == "y"
    assert from_networkx(h).labels == {2: "y"}


def test_is_bipartite():
    assert is_bipartite(cycle(4))
    assert not is_bipartite(cycle(5))


def test_all_pairs_distances_only_finite_pairs():
    g = Graph.from_edges(4, [(1, 2), (2, 3)])
    table = all_pairs_distances(g)
    assert table[1] == {1: 0, 2: 1, 3: 2}
    assert table[4] == {4: 0}
