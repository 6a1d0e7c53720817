"""Tests for the tree-depth and tree-width oracles."""

import pytest

from app.services.budget import BudgetExceededError, SearchBudget
from app.services.graph_core import Graph
from app.services.orderings import AccessKind, exact_colnum, treedepth_exact, treewidth_exact

from tests.helpers import complete, cycle, path


@pytest.mark.parametrize(
    "g,expected",
    [
        (path(1), 1),
        (path(3), 2),
        (path(7), 3),
        (path(8), 4),
        (cycle(5), 4),
        (complete(5), 5),
        (Graph.empty(3), 1),
        (Graph.empty(0), 0),
    ],
)
def test_treedepth(g, expected):
    assert treedepth_exact(g) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_weak_infinite_colouring_number_is_treedepth(n):
    g = path(n)
    assert exact_colnum(g, AccessKind.weak())[0] == treedepth_exact(g)


@pytest.mark.parametrize(
    "g,expected",
    [(path(5), 1), (cycle(5), 2), (complete(4), 3), (Graph.empty(3), 0), (Graph.empty(0), -1)],
)
def test_treewidth(g, expected):
    assert treewidth_exact(g) == expected


def test_treedepth_budget_exhaustion():
    with pytest.raises(BudgetExceededError) as excinfo:
        treedepth_exact(path(7), SearchBudget(node_limit=1))
    assert excinfo.value.best is None
