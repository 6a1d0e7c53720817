"""Tests for linear orders and access kinds."""

import pytest

from app.services.orderings import INFINITY, AccessKind, AccessType, LinearOrder
from app.services.orderings.exceptions import InvalidAccessKindError, InvalidOrderError


def test_linear_order_ranks():
    L = LinearOrder.of([3, 1, 2])
    assert L.rank[3] == 0
    assert L.less(3, 2)
    assert not L.less(2, 1)
    assert L.minimum([1, 2]) == 1
    assert tuple(L.earlier(2)) == (3, 1)
    assert list(L) == [3, 1, 2]
    assert len(L) == 3


@pytest.mark.parametrize("perm", [(1, 1), (0, 1), (1, 3), (1, "2")])
def test_linear_order_must_be_a_permutation(perm):
    with pytest.raises(InvalidOrderError):
        LinearOrder(perm)


def test_identity_order():
    assert LinearOrder.identity(3).perm == (1, 2, 3)
    assert LinearOrder.identity(0).n == 0


def test_access_kind_radius():
    assert AccessKind.weak().radius is INFINITY
    assert AccessKind.weak().effective_radius(7) == 7
    assert AccessKind.strong(2).effective_radius(7) == 2
    assert str(AccessKind.distance(5)) == "dcol_5"
    assert str(AccessKind.weak()) == "wcol_inf"


def test_distance_kind_needs_finite_radius():
    with pytest.raises(InvalidAccessKindError):
        AccessKind(AccessType.D_DIST, INFINITY)


def test_negative_radius_rejected():
    with pytest.raises(InvalidAccessKindError):
        AccessKind.strong(-1)
