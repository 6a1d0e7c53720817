"""Tests for the heuristic order constructions."""

import pytest

from app.services.graph_core import Graph
from app.services.graph_core.exceptions import VertexRangeError
from app.services.orderings import AccessKind, OrderStrategy, eval_colnum, heuristic_order

from tests.helpers import complete, cycle, path, star


def test_bfs_layers_ascending_within_layer():
    assert heuristic_order(path(5), OrderStrategy.BFS_ROOT, root=3).perm == (3, 2, 4, 1, 5)


def test_bfs_continues_into_other_components():
    assert heuristic_order(Graph.empty(3), OrderStrategy.BFS_ROOT, root=2).perm == (2, 1, 3)


def test_degeneracy_reverses_min_degree_removal():
    assert heuristic_order(path(4), OrderStrategy.DEGENERACY).perm == (4, 3, 2, 1)


def test_degeneracy_on_tree_gives_col_two():
    g = star(4)
    assert eval_colnum(g, heuristic_order(g, OrderStrategy.DEGENERACY), AccessKind.strong(1)) == 2


def test_td_dfs_orders_by_depth():
    assert heuristic_order(star(3), OrderStrategy.TD_DFS, root=2).perm == (2, 1, 3, 4)


@pytest.mark.parametrize("strategy", list(OrderStrategy))
def test_every_strategy_yields_a_permutation(strategy):
    g = cycle(7)
    assert sorted(heuristic_order(g, strategy)) == list(g.vertices)


@pytest.mark.parametrize("strategy", list(OrderStrategy))
def test_complete_graph_radius_one(strategy):
    g = complete(5)
    assert eval_colnum(g, heuristic_order(g, strategy), AccessKind.weak(1)) == 5


def test_empty_graph_gives_empty_order():
    assert heuristic_order(Graph.empty(0), OrderStrategy.DEGENERACY).n == 0


def test_root_must_be_a_vertex():
    with pytest.raises(VertexRangeError):
        heuristic_order(path(3), OrderStrategy.BFS_ROOT, root=4)
