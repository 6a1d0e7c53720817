"""Tests for the deterministic family generators."""

import pytest

from app.services.chi import chromatic_number, clique_number
from app.services.families import Family, FamilySpec, generate, regular_tree, subdivide
from app.services.families.exceptions import FamilyParameterError
from app.services.graph_core import (
    exact_distance_graph,
    exact_power_graph,
    induced_subgraph,
    max_degree,
    odd_girth,
    union,
)
from app.services.orderings import AccessKind, eval_colnum

from tests.helpers import complete, path


def gen(family: Family, **params):
    return generate(FamilySpec(family, params))


@pytest.mark.parametrize(
    "family,params,n,m",
    [
        (Family.PATH, {"n": 1}, 1, 0),
        (Family.PATH, {"n": 5}, 5, 4),
        (Family.CYCLE, {"n": 6}, 6, 6),
        (Family.COMPLETE, {"n": 4}, 4, 6),
        (Family.REG_TREE, {"k": 3, "r": 2}, 10, 9),
        (Family.LIK, {"i": 1, "k": 2}, 12, 14),
        (Family.LIK, {"i": 2, "k": 3}, 22, 24),
        (Family.SNP, {"n": 3, "p": 3}, 9, 9),
        (Family.AKP, {"k": 4, "p": 5}, 8, 11),
        (Family.GKP, {"k": 3, "p": 4}, 16, 21),
    ],
)
def test_sizes(family, params, n, m):
    g = generate(FamilySpec(family, params)).graph
    assert (g.n, g.m) == (n, m)


def test_generators_are_deterministic():
    first = gen(Family.GKP, k=3, p=5).graph
    second = gen(Family.GKP, k=3, p=5).graph
    assert sorted(first.edges) == sorted(second.edges)


def test_regular_tree_numbering():
    n, edges, levels = regular_tree(3, 2)
    assert n == 10
    assert levels == [[1], [2, 3, 4], [5, 6, 7, 8, 9, 10]]
    assert edges[:4] == [(1, 2), (1, 3), (1, 4), (2, 5)]


def test_lik_pendants_pairwise_at_distance_three():
    """For i = 1 the pendants of different branch vertices are exactly three apart."""
    out = gen(Family.LIK, i=1, k=2)
    h = exact_distance_graph(out.graph, 3)
    assert h.m == 24
    assert induced_subgraph(h, out.groups["pendant"]).m == 24


def test_lik_two_distance_four_graph():
    out = gen(Family.LIK, i=2, k=3)
    h = exact_distance_graph(out.graph, 4)
    assert induced_subgraph(h, out.groups["pendant"]).m == 6 * 3 * 3
    assert h.m == 6 * 9 + 12 * 3 + 3


def test_snp_structure_and_prescribed_order():
    out = gen(Family.SNP, n=3, p=3)
    assert out.groups["branch"] == (1, 2, 3)
    assert out.prescribed_order.perm == tuple(range(1, 10))
    assert eval_colnum(out.graph, out.prescribed_order, AccessKind.weak(2)) <= 4


def test_snp_branch_vertices_clique_at_distance_p():
    out = gen(Family.SNP, n=4, p=3)
    h = exact_distance_graph(out.graph, 3)
    assert induced_subgraph(h, out.groups["branch"]) == complete(4)
    assert chromatic_number(h).value == 4


def test_akp_structure():
    out = gen(Family.AKP, k=4, p=5)
    g = out.graph
    assert out.groups["path"] == (1, 2, 3, 4)
    assert out.groups["apex"] == (5, 6, 7, 8)
    assert all(g.has_edge(1, a) and g.has_edge(4, a) for a in out.groups["apex"])
    assert odd_girth(g) == 5


def test_akp_prescribed_order_has_small_weak_colouring_number():
    out = gen(Family.AKP, k=4, p=5)
    assert out.prescribed_order.perm[:2] == (1, 4)
    assert eval_colnum(out.graph, out.prescribed_order, AccessKind.weak(5)) <= 4


def test_akp_exact_power_contains_apex_clique():
    out = gen(Family.AKP, k=4, p=5)
    assert clique_number(exact_power_graph(out.graph, 5)).value >= 4


def test_akp_short_path_joins_both_ends():
    """p = 2 collapses the path to one vertex adjacent to every apex."""
    out = gen(Family.AKP, k=3, p=2)
    assert out.graph.n == 4
    assert out.graph.m == 3


@pytest.mark.parametrize("delta", [3, 4])
def test_regular_tree_exact_powers(delta):
    """chi of the exact 2- and 4-powers is Delta; their union needs Delta(Delta-1)+1."""
    tree = gen(Family.REG_TREE, k=delta, r=2).graph
    sharp2, sharp4 = exact_power_graph(tree, 2), exact_power_graph(tree, 4)
    assert chromatic_number(sharp2).value == delta
    assert chromatic_number(sharp4).value == delta
    assert chromatic_number(union(sharp2, sharp4)).value == delta * (delta - 1) + 1


@pytest.mark.parametrize("p", [4, 5])
def test_gkp_exact_power_clique(p):
    out = gen(Family.GKP, k=3, p=p)
    assert clique_number(exact_power_graph(out.graph, p)).value >= 3 * 2 ** (p // 2 - 1)
    assert max_degree(out.graph) <= (6 if p % 2 == 0 else 9)


def test_subdivide():
    out = subdivide(complete(3), 1)
    assert (out.graph.n, out.graph.m) == (6, 6)
    assert out.groups["subdivision"] == (4, 5, 6)
    assert subdivide(complete(3), 0).graph == complete(3)


def test_subdivision_family_needs_base():
    with pytest.raises(FamilyParameterError):
        generate(FamilySpec(Family.SUBDIVISION, {"s": 1}))
    out = generate(FamilySpec(Family.SUBDIVISION, {"s": 2}, base=path(2)))
    assert out.graph.edges == frozenset({(1, 3), (3, 4), (2, 4)})


@pytest.mark.parametrize(
    "family,params",
    [
        (Family.SNP, {"n": 1, "p": 3}),
        (Family.SNP, {"n": 3}),
        (Family.CYCLE, {"n": 2}),
        (Family.REG_TREE, {"k": 1, "r": 2}),
        (Family.GKP, {"k": 3, "p": 3}),
        (Family.LIK, {"i": 0, "k": 1}),
        (Family.GT, {"t": 3}),
    ],
)
def test_parameters_out_of_range(family, params):
    with pytest.raises(FamilyParameterError):
        generate(FamilySpec(family, params))
