"""Tests for the signature colouring of odd-distance unions."""

import pytest
from hypothesis import given, settings

from app.services.coloring import signature_coloring, signatures, verify_proper
from app.services.coloring.exceptions import ParityError
from app.services.families import Family, FamilySpec, generate
from app.services.graph_core import BIPARTITE, UnionMode, exact_distance_graph, odd_girth, odd_union_graph, union
from app.services.orderings import AccessKind, LinearOrder, eval_colnum

from tests.helpers import cycle, graphs_with_order


def test_p_one_is_proper_on_the_graph(c5):
    c = signature_coloring(c5, LinearOrder.identity(5), 1)
    assert verify_proper(c5, c)


def test_seven_cycle_distance_one_and_three():
    g = cycle(7)
    c = signature_coloring(g, LinearOrder.of([4, 2, 7, 1, 3, 6, 5]), 3)
    assert verify_proper(union(g, exact_distance_graph(g, 3)), c)


def test_akp_distance_mode_still_proper():
    """Odd girth p is below p+1, yet the distance union is still coloured properly."""
    out = generate(FamilySpec(Family.AKP, {"k": 4, "p": 5}))
    c = signature_coloring(out.graph, out.prescribed_order, 5)
    assert verify_proper(odd_union_graph(out.graph, 5, UnionMode.DISTANCE), c)


def test_signature_entries_in_range(c5):
    L = LinearOrder.identity(5)
    q = eval_colnum(c5, L, AccessKind.weak(3))
    for vector in signatures(c5, L, 3).values():
        assert vector.q == q
        assert all(-1 <= x <= 1 for x in vector.entries)
        assert 0 in vector.entries


def test_legend_holds_signatures(c5):
    c = signature_coloring(c5, LinearOrder.identity(5), 3)
    assert set(c.legend) == set(c.colours)
    assert sorted(c.legend.values()) == [c.legend[i] for i in sorted(c.legend)]


@pytest.mark.parametrize("p", [0, 2])
def test_rejects_even_p(p, c5):
    with pytest.raises(ParityError):
        signature_coloring(c5, LinearOrder.identity(5), p)


@settings(max_examples=60, deadline=None)
@given(graphs_with_order(max_vertices=8))
def test_signature_colouring_properties(data):
    g, L = data
    girth = odd_girth(g)
    for p in (1, 3, 5):
        c = signature_coloring(g, L, p)
        assert verify_proper(odd_union_graph(g, p, UnionMode.DISTANCE), c), f"p={p}"
        if girth is BIPARTITE or girth >= p + 1:
            assert verify_proper(odd_union_graph(g, p, UnionMode.PATH), c), f"p={p} path"
        q = eval_colnum(g, L, AccessKind.weak(p))
        assert c.palette_size <= (p // 2 + 2) ** q
