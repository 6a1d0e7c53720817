"""Tests for the exact distance-p colourings."""

import pytest
from hypothesis import given, settings

from app.services.coloring import color_exact_distance_even, color_exact_distance_odd, verify_proper
from app.services.coloring.exceptions import ParityError
from app.services.graph_core import Graph, exact_distance_graph, max_degree
from app.services.orderings import AccessKind, LinearOrder, OrderStrategy, eval_colnum, heuristic_order

from tests.helpers import bipartite_graphs, cycle, graphs_with_order, path, star


def test_odd_p_one_colours_the_graph(c5):
    L = LinearOrder.identity(5)
    c = color_exact_distance_odd(c5, L, 1)
    assert verify_proper(c5, c)
    assert c.palette_size <= eval_colnum(c5, L, AccessKind.distance(1))


def test_odd_on_six_cycle():
    g = cycle(6)
    c = color_exact_distance_odd(g, LinearOrder.identity(6), 3)
    assert verify_proper(exact_distance_graph(g, 3), c)


def test_odd_on_g4(g4):
    """Any order gives a proper colouring of the distance-3 graph, so at least five colours."""
    g = g4.graph
    L = heuristic_order(g, OrderStrategy.DEGENERACY)
    c = color_exact_distance_odd(g, L, 3)
    assert verify_proper(exact_distance_graph(g, 3), c)
    assert 5 <= c.palette_size <= eval_colnum(g, L, AccessKind.distance(5))


def test_even_on_star():
    g = star(4)
    c = color_exact_distance_even(g, LinearOrder.of([3, 1, 2, 4, 5]), 2)
    assert verify_proper(exact_distance_graph(g, 2), c)
    assert len({c[v] for v in (2, 3, 4, 5)}) == 4


def test_even_on_path(p3):
    c = color_exact_distance_even(p3, LinearOrder.identity(3), 2)
    assert c[1] != c[3]
    assert c.legend[c[1]] == (1, 0)
    assert c.legend[c[2]] == (1, 1)


def test_even_on_isolated_vertices():
    c = color_exact_distance_even(Graph.empty(2), LinearOrder.identity(2), 2)
    assert all(label[1] == 0 for label in c.legend.values())


def test_even_reserved_index_only_without_beta():
    # at p = 4 the least vertex still reaches a neighbour inside its own ball
    c = color_exact_distance_even(path(5), LinearOrder.identity(5), 4)
    assert all(label[1] >= 1 for label in c.legend.values())


@pytest.mark.parametrize("p", [0, 2, 4])
def test_odd_procedure_rejects_even_p(p, c5):
    with pytest.raises(ParityError):
        color_exact_distance_odd(c5, LinearOrder.identity(5), p)


@pytest.mark.parametrize("p", [1, 3])
def test_even_procedure_rejects_odd_p(p, c5):
    with pytest.raises(ParityError):
        color_exact_distance_even(c5, LinearOrder.identity(5), p)


@settings(max_examples=60, deadline=None)
@given(graphs_with_order(max_vertices=9))
def test_odd_colouring_proper_within_dcol(data):
    g, L = data
    for p in (1, 3, 5):
        c = color_exact_distance_odd(g, L, p)
        assert verify_proper(exact_distance_graph(g, p), c), f"p={p}"
        assert c.palette_size <= eval_colnum(g, L, AccessKind.distance(2 * p - 1))


@settings(max_examples=60, deadline=None)
@given(graphs_with_order(max_vertices=9))
def test_even_colouring_proper_within_bound(data):
    g, L = data
    for p in (2, 4):
        c = color_exact_distance_even(g, L, p)
        assert verify_proper(exact_distance_graph(g, p), c), f"p={p}"
        bound = eval_colnum(g, L, AccessKind.distance(2 * p)) * max(max_degree(g), 1)
        assert c.palette_size <= bound


@settings(max_examples=40, deadline=None)
@given(bipartite_graphs())
def test_even_colouring_on_bipartite_graphs(g):
    L = heuristic_order(g, OrderStrategy.BFS_ROOT)
    assert verify_proper(exact_distance_graph(g, 2), color_exact_distance_even(g, L, 2))
