"""The bundled outerplanar graph G_4 and its structural checks.

G_4 carries two disjoint sets of five x-vertices that form 5-cycles in the
exact distance-3 graph, an apex z at distance 3 from all of them, and two
covers y^1, y^2 at distance 3 from their own side and from each other. Any
colouring of the distance-3 graph then needs two colours beyond what one
side needs: z's colour is missing from both sides, each side uses every other
colour, so both covers would need z's colour.
"""

from importlib import resources
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from loguru import logger

from app.models.report import BoundEntry, BoundReport
from app.services.budget import SearchBudget
from app.services.chi import chromatic_number
from app.services.graph_core import Graph, exact_distance_graph, induced_subgraph, parse_graph
from app.services.graph_core.exceptions import GraphParseError

from .exceptions import BundledDataError, G4ValidationError
from .models import FamilyOutput

logger = logger.bind(name=__name__)

G4_RESOURCE = "g4.gr"
G4_CHI3 = 5

# one side of G_4 by role: hub w, cover y, fan path u_1..u_5, x-vertices hung below
_SIDE_EDGES = (
    ("w", "y"), ("w", "u1"), ("w", "u2"), ("w", "u3"), ("w", "u4"), ("w", "u5"),
    ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "u5"),
    ("u1", "x4"), ("u2", "x3"), ("u2", "x5"), ("u3", "x1"), ("u3", "x3"), ("u4", "x2"), ("u5", "x2"),
)


def _x_label(side: int, a: int) -> str:
    return f"x_{a}^{side}"


def _role_name(role: str, side: int) -> str:
    if role in ("w", "y"):
        return f"{role}^{side}"
    return f"{role[0]}_{role[1:]}^{side}"


def g4_role_edges() -> FrozenSet[FrozenSet[str]]:
    """The 37 edges of G_4 as pairs of vertex labels."""
    edges = {frozenset(pair) for pair in (("z", "w^1"), ("z", "w^2"), ("w^1", "w^2"))}
    for side in (1, 2):
        edges.update(frozenset((_role_name(a, side), _role_name(b, side))) for a, b in _SIDE_EDGES)
    return frozenset(edges)


def _labelled_edges(g: Graph) -> FrozenSet[FrozenSet[Optional[str]]]:
    return frozenset(frozenset((g.labels.get(u), g.labels.get(v))) for u, v in g.edges)


def _roles(g: Graph) -> Optional[Dict[str, Tuple[int, ...]]]:
    """Role groups resolved from labels, or None when a role is missing."""
    by_name = {name: v for v, name in g.labels.items()}
    try:
        return {
            "part1": tuple(by_name[_x_label(1, a)] for a in range(1, 6)),
            "part2": tuple(by_name[_x_label(2, a)] for a in range(1, 6)),
            "apex": (by_name["z"],),
            "cover1": (by_name["y^1"],),
            "cover2": (by_name["y^2"],),
            "hub1": (by_name["w^1"],),
            "hub2": (by_name["w^2"],),
        }
    except KeyError:
        return None


def apex_pair_failures(h3: Graph, groups: Dict[str, Tuple[int, ...]]) -> List[str]:
    """Names of the apex-pair conditions that fail in the distance-3 graph ``h3``."""
    part1, part2 = set(groups["part1"]), set(groups["part2"])
    (z,), (y1,), (y2,) = groups["apex"], groups["cover1"], groups["cover2"]
    nbrs = h3.neighbour_sets
    failed = []
    if part1 & part2 or {z, y1, y2} & (part1 | part2) or len({z, y1, y2}) < 3:
        failed.append("parts_disjoint")
    if not (part1 | part2) <= nbrs[z]:
        failed.append("parts_in_apex_neighbourhood")
    if not part1 <= nbrs[y1]:
        failed.append("part1_in_cover1_neighbourhood")
    if not part2 <= nbrs[y2]:
        failed.append("part2_in_cover2_neighbourhood")
    if y2 not in nbrs[y1]:
        failed.append("covers_adjacent")
    return failed


def structural_lower_bound(output: FamilyOutput, h3: Optional[Graph] = None) -> Optional[int]:
    """Certified lower bound on chi of the exact distance-3 graph.

    Re-checks the apex-pair structure on the graph and returns
    ``part_lower_bound + 2``; None when the output carries no such structure
    or a condition fails.
    """
    needed = ("part1", "part2", "apex", "cover1", "cover2")
    if output.part_lower_bound is None or any(name not in output.groups for name in needed):
        return None
    if h3 is None:
        h3 = exact_distance_graph(output.graph, 3)
    if apex_pair_failures(h3, output.groups):
        return None
    return output.part_lower_bound + 2


def _load_text() -> str:
    try:
        return resources.files("app.services.families").joinpath("data", G4_RESOURCE).read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as e:
        raise BundledDataError(G4_RESOURCE, str(e)) from e


def validate_g4(output: FamilyOutput, budget: Optional[SearchBudget] = None) -> BoundReport:
    """Check every structural assertion of the G_4 lower-bound argument.

    Args:
        output: Candidate G_4; roles are located through vertex labels
        budget: Budget for the chromatic number computation

    Returns:
        BoundReport with one entry per assertion; missing roles fail every entry
    """
    report = BoundReport(suite="validate_g4")
    names = [
        "g4_cycle1_5cycle", "g4_cycle2_5cycle", "g4_cycles_disjoint", "g4_cycles_in_N_z",
        "g4_cycle1_in_N_y1", "g4_cycle2_in_N_y2", "g4_y1y2_edge", "g4_edge_set",
    ]
    groups = _roles(output.graph)
    if groups is None:
        for name in names:
            report.add(BoundEntry.check(name, False, reason="missing role labels"))
        report.add(BoundEntry.compare("g4_chi_d3", G4_CHI3, 0))
        return report

    h3 = exact_distance_graph(output.graph, 3)
    for side in (1, 2):
        cycle = induced_subgraph(h3, groups[f"part{side}"])
        ok = nx.is_isomorphic(cycle.nx_graph, nx.cycle_graph(5))
        report.add(BoundEntry.check(f"g4_cycle{side}_5cycle", ok, reason="x-vertices do not induce a 5-cycle"))

    failed = set(apex_pair_failures(h3, groups))
    report.add(BoundEntry.check("g4_cycles_disjoint", "parts_disjoint" not in failed))
    report.add(BoundEntry.check("g4_cycles_in_N_z", "parts_in_apex_neighbourhood" not in failed))
    report.add(BoundEntry.check("g4_cycle1_in_N_y1", "part1_in_cover1_neighbourhood" not in failed))
    report.add(BoundEntry.check("g4_cycle2_in_N_y2", "part2_in_cover2_neighbourhood" not in failed))
    report.add(BoundEntry.check("g4_y1y2_edge", "covers_adjacent" not in failed))
    g, expected = output.graph, g4_role_edges()
    exact = g.n == 25 and g.m == len(expected) and _labelled_edges(g) == expected
    report.add(BoundEntry.check("g4_edge_set", exact, reason="edges differ from the labelled G_4"))

    result = chromatic_number(h3, budget=budget)
    if result.exact:
        report.add(BoundEntry.compare("g4_chi_d3", G4_CHI3, result.value))
    else:
        report.add(BoundEntry.skipped("g4_chi_d3", G4_CHI3, str(result)))
    return report


def load_g4(validate: bool = True) -> FamilyOutput:
    """Load the bundled G_4.

    Args:
        validate: Run validate_g4 and refuse a candidate that fails it

    Returns:
        FamilyOutput with role groups, the per-side bound 3 and the certified bound 5

    Raises:
        BundledDataError: If the data file is missing or unparsable
        G4ValidationError: If validation fails
    """
    try:
        g = parse_graph(_load_text())
    except GraphParseError as e:
        raise BundledDataError(G4_RESOURCE, str(e)) from e
    groups = _roles(g)
    if groups is None:
        raise BundledDataError(G4_RESOURCE, "role labels missing")

    output = FamilyOutput(graph=g, groups=groups)
    if validate:
        report = validate_g4(output)
        if not report.passed:
            raise G4ValidationError([e.name for e in report.failures])

    h3 = exact_distance_graph(g, 3)
    output.part_lower_bound = min(
        chromatic_number(induced_subgraph(h3, groups[f"part{side}"])).value for side in (1, 2)
    )
    output.chi3_lower_bound = structural_lower_bound(output, h3)
    logger.debug(f"Loaded G_4: n={g.n}, m={g.m}, certified chi3 >= {output.chi3_lower_bound}")
    return output
