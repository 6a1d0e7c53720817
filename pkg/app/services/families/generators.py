"""Deterministic generators for the graph families.

Numbering conventions (relied on by prescribed orders and tests):

- REG_TREE(k, r): root 1, vertices numbered breadth-first, children of a
  vertex consecutive. The root has k children, every other inner vertex k-1.
- GKP(k, p): the tree T(k, floor(p/2)) numbered as above, then the internal
  vertices of the attachment paths, tree edges taken by ascending child id,
  shorter path first, each path walked from the parent side.
- LIK(i, k): branch vertices 1..4; then i-1 subdivision vertices per K_4 edge,
  edges in lexicographic order, walked from the smaller branch vertex; then
  k pendants per branch vertex, branch 1 first.
- SNP(n, p): branch vertices 1..n; then p-1 subdivision vertices per pair
  (a, b), pairs in lexicographic order, walked from a.
- AKP(k, p): path 1..p-1 (ends 1 and p-1), then the k apices.
- SUBDIVISION(g, s): the vertices of g, then s new vertices per edge of g,
  edges ascending, walked from the smaller endpoint.
"""

from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx
from loguru import logger

from app.services.graph_core import Graph
from app.services.graph_core.models import Edge
from app.services.orderings.models import LinearOrder

from .exceptions import FamilyParameterError
from .g4 import load_g4
from .gadget import build_gt
from .models import Family, FamilyOutput, FamilySpec

logger = logger.bind(name=__name__)


def _require(family: Family, name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise FamilyParameterError(family.name, name, value, f"an integer >= {minimum}")


def _add_path(edges: List[Edge], start: int, end: int, length: int, next_id: int) -> int:
    """Append a start..end path with ``length`` edges through fresh vertices.

    Returns:
        The next unused vertex id
    """
    previous = start
    for _ in range(length - 1):
        edges.append((previous, next_id))
        previous = next_id
        next_id += 1
    edges.append((previous, end))
    return next_id


def regular_tree(k: int, r: int) -> Tuple[int, List[Edge], List[List[int]]]:
    """Breadth-first numbered tree of radius r; returns (n, edges, levels)."""
    levels = [[1]]
    edges: List[Edge] = []
    next_id = 2
    for depth in range(r):
        children = k if depth == 0 else k - 1
        layer = []
        for parent in levels[-1]:
            for _ in range(children):
                edges.append((parent, next_id))
                layer.append(next_id)
                next_id += 1
        levels.append(layer)
    return next_id - 1, edges, levels


def _level_groups(levels: List[List[int]]) -> Dict[str, Tuple[int, ...]]:
    return {f"level{depth}": tuple(layer) for depth, layer in enumerate(levels)}


def _reg_tree(spec: FamilySpec) -> FamilyOutput:
    k, r = spec.param("k"), spec.param("r")
    _require(spec.family, "k", k, 2)
    _require(spec.family, "r", r, 1)
    n, edges, levels = regular_tree(k, r)
    return FamilyOutput(
        graph=Graph.from_edges(n, edges, {1: "root"}),
        groups=_level_groups(levels),
    )


def _gkp(spec: FamilySpec) -> FamilyOutput:
    k, p = spec.param("k"), spec.param("p")
    _require(spec.family, "k", k, 2)
    _require(spec.family, "p", p, 4)
    n, edges, levels = regular_tree(k, p // 2)
    depth_of = {v: depth for depth, layer in enumerate(levels) for v in layer}
    next_id = n + 1
    for parent, child in sorted(list(edges), key=lambda e: e[1]):
        level = depth_of[parent]
        if level < 1:
            continue
        lengths = (level + 1,) if p % 2 == 0 else (level + 1, level + 2)
        for length in lengths:
            next_id = _add_path(edges, parent, child, length, next_id)
    groups = _level_groups(levels)
    groups["gadget"] = tuple(range(n + 1, next_id))
    return FamilyOutput(graph=Graph.from_edges(next_id - 1, edges, {1: "root"}), groups=groups)


def _lik(spec: FamilySpec) -> FamilyOutput:
    i, k = spec.param("i"), spec.param("k")
    _require(spec.family, "i", i, 1)
    _require(spec.family, "k", k, 1)
    edges: List[Edge] = []
    next_id = 5
    for a, b in combinations(range(1, 5), 2):
        next_id = _add_path(edges, a, b, i, next_id)
    subdivision = tuple(range(5, next_id))
    pendants: Dict[str, Tuple[int, ...]] = {}
    for branch in range(1, 5):
        group = []
        for _ in range(k):
            edges.append((branch, next_id))
            group.append(next_id)
            next_id += 1
        pendants[f"pendant{branch}"] = tuple(group)
    groups = {"branch": (1, 2, 3, 4), "subdivision": subdivision, **pendants}
    groups["pendant"] = tuple(v for b in range(1, 5) for v in pendants[f"pendant{b}"])
    return FamilyOutput(graph=Graph.from_edges(next_id - 1, edges), groups=groups)


def _snp(spec: FamilySpec) -> FamilyOutput:
    n, p = spec.param("n"), spec.param("p")
    _require(spec.family, "n", n, 2)
    _require(spec.family, "p", p, 2)
    edges: List[Edge] = []
    next_id = n + 1
    for a, b in combinations(range(1, n + 1), 2):
        next_id = _add_path(edges, a, b, p, next_id)
    total = next_id - 1
    return FamilyOutput(
        graph=Graph.from_edges(total, edges),
        prescribed_order=LinearOrder.identity(total),
        groups={"branch": tuple(range(1, n + 1)), "subdivision": tuple(range(n + 1, total + 1))},
    )


def _akp(spec: FamilySpec) -> FamilyOutput:
    k, p = spec.param("k"), spec.param("p")
    _require(spec.family, "k", k, 1)
    _require(spec.family, "p", p, 2)
    ends = (1, p - 1)
    edges: List[Edge] = [(v, v + 1) for v in range(1, p - 1)]
    apices = tuple(range(p, p + k))
    for apex in apices:
        edges.append((1, apex))
        if p - 1 != 1:
            edges.append((p - 1, apex))
    total = p + k - 1
    head = list(dict.fromkeys(ends))
    order = head + [v for v in range(1, total + 1) if v not in head]
    return FamilyOutput(
        graph=Graph.from_edges(total, edges),
        prescribed_order=LinearOrder.of(order),
        groups={"path": tuple(range(1, p)), "ends": tuple(head), "apex": apices},
    )


def subdivide(g: Graph, s: int) -> FamilyOutput:
    """Replace every edge of g by a path of length s+1."""
    _require(Family.SUBDIVISION, "s", s, 0)
    edges: List[Edge] = []
    next_id = g.n + 1
    for u, v in g.sorted_edges():
        next_id = _add_path(edges, u, v, s + 1, next_id)
    return FamilyOutput(
        graph=Graph.from_edges(next_id - 1, edges, g.labels),
        groups={"original": tuple(g.vertices), "subdivision": tuple(range(g.n + 1, next_id))},
    )


def _from_networkx(builder, n: int) -> Graph:
    return Graph.from_edges(n, builder(range(1, n + 1)).edges)


def _simple(spec: FamilySpec) -> FamilyOutput:
    n = spec.param("n")
    if spec.family is Family.PATH:
        _require(spec.family, "n", n, 1)
        return FamilyOutput(graph=_from_networkx(nx.path_graph, n))
    if spec.family is Family.CYCLE:
        _require(spec.family, "n", n, 3)
        return FamilyOutput(graph=_from_networkx(nx.cycle_graph, n))
    _require(spec.family, "n", n, 1)
    return FamilyOutput(graph=_from_networkx(nx.complete_graph, n))


def generate(spec: FamilySpec) -> FamilyOutput:
    """Build the graph described by ``spec``.

    Args:
        spec: Family and parameters

    Returns:
        FamilyOutput with the graph, prescribed order (SNP, AKP) and role groups

    Raises:
        FamilyParameterError: If a parameter is missing or out of range
    """

    try:
        if spec.family in (Family.PATH, Family.CYCLE, Family.COMPLETE):
            output = _simple(spec)
        elif spec.family is Family.REG_TREE:
            output = _reg_tree(spec)
        elif spec.family is Family.GKP:
            output = _gkp(spec)
        elif spec.family is Family.LIK:
            output = _lik(spec)
        elif spec.family is Family.SNP:
            output = _snp(spec)
        elif spec.family is Family.AKP:
            output = _akp(spec)
        elif spec.family is Family.G4:
            output = load_g4()
        elif spec.family is Family.G5:
            output = build_gt(5)
        elif spec.family is Family.GT:
            output = build_gt(spec.param("t"))
        else:
            if spec.base is None:
                raise FamilyParameterError(spec.family.name, "base", None, "a base graph")
            output = subdivide(spec.base, spec.param("s"))
    except KeyError as e:
        raise FamilyParameterError(spec.family.name, e.args[0], None, "a value") from e

    logger.debug(f"Generated {spec.family.name} {spec.params}: n={output.graph.n}, m={output.graph.m}")
    return output
