"""Tests for the doubling gadget and the G_t sequence."""

import pytest

from app.services.chi import chromatic_number
from app.services.families import build_g5, build_gt
from app.services.families.exceptions import FamilyParameterError
from app.services.graph_core import Graph, bounded_distances, exact_distance_graph

from tests.helpers import cycle


def test_build_g5_on_five_cycle():
    out = build_g5(cycle(5))
    assert out.graph.n == 25
    assert out.groups["top"] == (11, 12, 13, 14, 15)
    assert out.labels[13] == "z"
    assert out.chi3_lower_bound is None


def test_build_g5_on_single_vertex():
    """Both copies of the vertex sit at distance 3 from the apex."""
    out = build_g5(Graph.empty(1))
    assert out.graph.n == 9
    z = out.vertex("z")
    dist = bounded_distances(out.graph, z, 9).dist
    assert dist[1] == 3
    assert dist[2] == 3


def test_build_g5_needs_a_vertex():
    with pytest.raises(FamilyParameterError):
        build_g5(Graph.empty(0))


def test_build_g4_is_the_bundled_graph(g4):
    out = build_gt(4)
    assert out.graph == g4.graph
    assert out.chi3_lower_bound == 5


def test_build_gt_rejects_small_t():
    with pytest.raises(FamilyParameterError):
        build_gt(3)


def test_g5_certified_bound(g4):
    out = build_g5(g4.graph, g4.chi3_lower_bound)
    assert out.graph.n == 4 * 25 + 5
    assert out.part_lower_bound == 5
    assert out.chi3_lower_bound == 7


@pytest.mark.slow
def test_g5_chromatic_number(g4):
    out = build_g5(g4.graph, g4.chi3_lower_bound)
    result = chromatic_number(exact_distance_graph(out.graph, 3), lower_bound=out.chi3_lower_bound)
    assert result.exact
    assert result.value == 7


@pytest.mark.slow
def test_g6_certified_bound():
    out = build_gt(6)
    assert out.graph.n == 4 * 105 + 5
    assert out.chi3_lower_bound == 9
