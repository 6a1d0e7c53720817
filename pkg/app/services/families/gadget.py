"""Doubling gadget producing G_{t+1} from G_t.

Numbering of build_g5(f) with n = |V(f)|:

- F_1 = 1..n and F_2 = n+1..2n, copies of f;
- y^1, w^1, z, w^2, y^2 = 2n+1..2n+5, the path y^1 w^1 z w^2 y^2 plus w^1 w^2;
- 2n+5+b subdivides the attachment of F_1's vertex b to w^1, and 3n+5+b
  that of F_2's vertex b to w^2.
"""

from typing import Dict, List, Optional

from loguru import logger

from app.services.graph_core import Graph, exact_distance_graph
from app.services.graph_core.models import Edge

from .exceptions import FamilyParameterError
from .g4 import load_g4, structural_lower_bound
from .models import Family, FamilyOutput

logger = logger.bind(name=__name__)

TOP_NAMES = ("y^1", "w^1", "z", "w^2", "y^2")


def _inherits_part_bound(f: Graph, h3: Graph, offset: int) -> bool:
    """True iff the distance-3 graph of f embeds in h3 on the copy at ``offset``."""
    f3 = exact_distance_graph(f, 3)
    return all(h3.has_edge(u + offset, v + offset) for u, v in f3.edges)


def build_g5(f: Graph, f_lower_bound: Optional[int] = None) -> FamilyOutput:
    """Two copies of f joined to a five-vertex top path through length-2 paths.

    Args:
        f: Non-empty base graph
        f_lower_bound: Certified lower bound on chi of f's exact distance-3
            graph; when given, the output carries a certified bound two higher

    Returns:
        FamilyOutput on 4n+5 vertices with role groups and labels

    Raises:
        FamilyParameterError: If f has no vertices
    """
    n = f.n
    if n < 1:
        raise FamilyParameterError(Family.G5.name, "f", n, "a graph with at least one vertex")
    y1, w1, z, w2, y2 = range(2 * n + 1, 2 * n + 6)
    edges: List[Edge] = []
    for offset in (0, n):
        edges.extend((u + offset, v + offset) for u, v in f.edges)
    edges.extend([(y1, w1), (w1, z), (z, w2), (w2, y2), (w1, w2)])
    for b in f.vertices:
        edges.extend([(b, 2 * n + 5 + b), (2 * n + 5 + b, w1)])
        edges.extend([(n + b, 3 * n + 5 + b), (3 * n + 5 + b, w2)])

    labels: Dict[int, str] = {}
    for side, offset in ((1, 0), (2, n)):
        labels.update({v + offset: f"F{side}.{name}" for v, name in f.labels.items()})
    labels.update(dict(zip((y1, w1, z, w2, y2), TOP_NAMES)))
    for b in f.vertices:
        labels[2 * n + 5 + b] = f"s^1_{b}"
        labels[3 * n + 5 + b] = f"s^2_{b}"

    output = FamilyOutput(
        graph=Graph.from_edges(4 * n + 5, edges, labels),
        groups={
            "part1": tuple(range(1, n + 1)),
            "part2": tuple(range(n + 1, 2 * n + 1)),
            "top": (y1, w1, z, w2, y2),
            "apex": (z,),
            "cover1": (y1,),
            "cover2": (y2,),
            "subdivision1": tuple(range(2 * n + 6, 3 * n + 6)),
            "subdivision2": tuple(range(3 * n + 6, 4 * n + 6)),
        },
    )
    if f_lower_bound is not None:
        h3 = exact_distance_graph(output.graph, 3)
        if _inherits_part_bound(f, h3, 0) and _inherits_part_bound(f, h3, n):
            output.part_lower_bound = f_lower_bound
            output.chi3_lower_bound = structural_lower_bound(output, h3)
        else:
            logger.warning("Base distance-3 graph does not embed in the copies; no bound certified")
    return output


def build_gt(t: int) -> FamilyOutput:
    """G_4 for t = 4, otherwise the gadget applied to G_{t-1}.

    The certified bound on chi of the exact distance-3 graph is 2(t-2)+1.
    """
    if not isinstance(t, int) or t < 4:
        raise FamilyParameterError(Family.GT.name, "t", t, "an integer >= 4")
    output = load_g4()
    for step in range(5, t + 1):
        output = build_g5(output.graph, output.chi3_lower_bound)
        logger.debug(f"Built G_{step}: n={output.graph.n}, chi3 >= {output.chi3_lower_bound}")
    return output
