"""Tests for the clique number oracle."""

from itertools import combinations

from hypothesis import given, settings

from app.services.budget import SearchBudget
from app.services.chi import clique_number, greedy_clique
from app.services.graph_core import Graph

from tests.helpers import complete, graphs


def is_clique(g: Graph, vertices) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def test_five_cycle(c5):
    result = clique_number(c5)
    assert result.exact
    assert result.value == 2
    assert is_clique(c5, result.witness)


def test_complete_graph():
    result = clique_number(complete(5))
    assert result.value == 5
    assert result.witness == (1, 2, 3, 4, 5)


def test_empty_graph():
    assert clique_number(Graph.empty(0)).value == 0
    assert clique_number(Graph.empty(2)).value == 1


def test_budget_exhaustion_keeps_lower_bound(c5):
    result = clique_number(c5, budget=SearchBudget(node_limit=1))
    assert not result.exact
    assert result.value == 2
    assert str(result) == "BOUNDS(2,3)"


def test_greedy_clique_is_a_clique(k4):
    assert greedy_clique(k4) == (1, 2, 3, 4)


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=9))
def test_clique_number_is_maximum(g):
    result = clique_number(g, budget=SearchBudget.unlimited())
    assert result.exact
    assert is_clique(g, result.witness)
    assert len(result.witness) == result.value
    assert not any(
        is_clique(g, subset) for subset in combinations(g.vertices, result.value + 1)
    )
