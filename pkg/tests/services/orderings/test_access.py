"""Tests for the back-sets Q, R and D and their evaluators."""

import pytest
from hypothesis import given, settings

from app.services.orderings import (
    AccessKind,
    LinearOrder,
    access_set,
    access_set_by_paths,
    access_sets,
    eval_colnum,
    weak_access_distance,
)
from app.services.orderings.exceptions import OrderSizeMismatchError

from tests.helpers import complete, cycle, graphs_with_order, path


def test_weak_access_blocked_by_smaller_internal_vertex(p3):
    """With L = (2, 1, 3) the path 3-2-1 passes through 2 <_L 1."""
    assert access_set(p3, LinearOrder.of([2, 1, 3]), AccessKind.weak(2), 3) == frozenset({2})


def test_weak_access_through_larger_internal_vertex(p3):
    assert access_set(p3, LinearOrder.identity(3), AccessKind.weak(2), 3) == frozenset({1, 2})


def test_strong_access_stops_at_first_smaller_vertex(p3):
    """The internal vertex 2 is smaller than y = 3, so only 2 itself is reached."""
    assert access_set(p3, LinearOrder.identity(3), AccessKind.strong(2), 3) == frozenset({2})


def test_distance_access_on_path():
    """On P_4 in id order, 1 is weakly but not distance 3-accessible from 4."""
    g = path(4)
    L = LinearOrder.identity(4)
    assert access_set(g, L, AccessKind.weak(3), 4) == frozenset({1, 2, 3})
    assert access_set(g, L, AccessKind.distance(3), 4) == frozenset({2, 3})
    assert access_set(g, L, AccessKind.distance(1), 4) == frozenset({3})


@pytest.mark.parametrize("kind", [AccessKind.weak(3), AccessKind.strong(3), AccessKind.distance(3)])
def test_minimum_vertex_has_empty_back_set(kind, c5):
    L = LinearOrder.of([4, 1, 2, 3, 5])
    assert access_set(c5, L, kind, 4) == frozenset()


@pytest.mark.parametrize("kind", [AccessKind.weak(1), AccessKind.strong(1), AccessKind.distance(1)])
def test_complete_graph_radius_one(kind):
    """The last vertex of K_n sees all n-1 others."""
    assert eval_colnum(complete(5), LinearOrder.of([3, 5, 1, 2, 4]), kind) == 5


def test_radius_zero_gives_empty_back_sets(c5):
    assert eval_colnum(c5, LinearOrder.identity(5), AccessKind.weak(0)) == 1


def test_access_sets_cover_every_vertex(c5):
    sets = access_sets(c5, LinearOrder.identity(5), AccessKind.weak(1))
    assert sets == {
        1: frozenset(), 2: frozenset({1}), 3: frozenset({2}), 4: frozenset({3}), 5: frozenset({1, 4}),
    }


def test_order_size_must_match_graph(c5):
    with pytest.raises(OrderSizeMismatchError):
        eval_colnum(c5, LinearOrder.identity(4), AccessKind.weak(1))


def test_weak_access_distance(p3):
    L = LinearOrder.identity(3)
    assert weak_access_distance(p3, L, 3, 1) == 2
    assert weak_access_distance(p3, L, 3, 3) == 0
    assert weak_access_distance(p3, L, 1, 3) is None


def test_weak_access_distance_blocked(p3):
    assert weak_access_distance(p3, LinearOrder.of([2, 1, 3]), 3, 1) is None


def test_strong_infinite_radius_on_cycle():
    """In id order on C_6 the last vertex reaches 1 directly and 5 directly."""
    g = cycle(6)
    assert access_set(g, LinearOrder.identity(6), AccessKind.strong(), 6) == frozenset({1, 5})


@settings(max_examples=60, deadline=None)
@given(graphs_with_order(max_vertices=6))
def test_evaluators_agree_with_path_enumeration(data):
    g, L = data
    for k in (1, 2, 3, 4):
        for kind in (AccessKind.weak(k), AccessKind.strong(k), AccessKind.distance(k)):
            sets = access_sets(g, L, kind)
            for y in g.vertices:
                assert sets[y] == access_set_by_paths(g, L, kind, y), f"{kind} y={y}"


@settings(max_examples=60, deadline=None)
@given(graphs_with_order(max_vertices=7))
def test_strong_distance_weak_sandwich(data):
    """R_k inside D_k inside Q_k, and Q_{k//2+1} inside D_k."""
    g, L = data
    for k in (1, 2, 3, 4, 5):
        R = access_sets(g, L, AccessKind.strong(k))
        D = access_sets(g, L, AccessKind.distance(k))
        Q = access_sets(g, L, AccessKind.weak(k))
        half = access_sets(g, L, AccessKind.weak(k // 2 + 1))
        for y in g.vertices:
            assert R[y] <= D[y] <= Q[y]
            assert half[y] <= D[y]


@settings(max_examples=40, deadline=None)
@given(graphs_with_order(max_vertices=7))
def test_back_sets_grow_with_radius(data):
    g, L = data
    for k in (1, 2, 3):
        for make in (AccessKind.weak, AccessKind.strong):
            smaller = access_sets(g, L, make(k))
            larger = access_sets(g, L, make(k + 1))
            assert all(smaller[y] <= larger[y] for y in g.vertices)


@settings(max_examples=40, deadline=None)
@given(graphs_with_order(max_vertices=6))
def test_weak_accessibility_composes(data):
    """Two vertices weakly reachable from y reach each other within the summed radius."""
    g, L = data
    for y in g.vertices:
        reach = {x: weak_access_distance(g, L, y, x) for x in g.vertices}
        reach = {x: d for x, d in reach.items() if d is not None}
        for x, k in reach.items():
            for z, ell in reach.items():
                if x == z:
                    continue
                low, high = (x, z) if L.less(x, z) else (z, x)
                d = weak_access_distance(g, L, high, low)
                assert d is not None and d <= k + ell
