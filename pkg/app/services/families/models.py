"""Data models for family specifications and generator output."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from app.services.graph_core import Graph
from app.services.orderings.models import LinearOrder


class Family(Enum):
    """Supported graph families."""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    REG_TREE = "reg-tree"
    GKP = "gkp"
    LIK = "lik"
    SNP = "snp"
    AKP = "akp"
    G4 = "g4"
    G5 = "g5"
    GT = "gt"
    SUBDIVISION = "subdivision"


# Parameter names per family, in CLI order.
FAMILY_PARAMS: Dict[Family, Tuple[str, ...]] = {
    Family.PATH: ("n",),
    Family.CYCLE: ("n",),
    Family.COMPLETE: ("n",),
    Family.REG_TREE: ("k", "r"),
    Family.GKP: ("k", "p"),
    Family.LIK: ("i", "k"),
    Family.SNP: ("n", "p"),
    Family.AKP: ("k", "p"),
    Family.G4: (),
    Family.G5: (),
    Family.GT: ("t",),
    Family.SUBDIVISION: ("s",),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its integer parameters.

    SUBDIVISION additionally carries the base graph.
    """

    family: Family
    params: Dict[str, int] = field(default_factory=dict, hash=False)
    base: Optional[Graph] = None

    def param(self, name: str) -> int:
        return self.params[name]


@dataclass
class FamilyOutput:
    """A generated graph with optional prescribed order and role groups.

    Attributes:
        graph: The generated graph; per-vertex role names live in ``graph.labels``
        prescribed_order: Ordering given with the construction, if any
        groups: Named vertex groups such as ``branch`` or ``level2``
        chi3_lower_bound: Certified lower bound on the chromatic number of the
            exact distance-3 graph, for the G_t constructions
        part_lower_bound: Colours each of the two parts (groups ``part1`` and
            ``part2``) needs in the exact distance-3 graph, for the G_t constructions
    """

    graph: Graph
    prescribed_order: Optional[LinearOrder] = None
    groups: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    chi3_lower_bound: Optional[int] = None
    part_lower_bound: Optional[int] = None

    @property
    def labels(self) -> Dict[int, str]:
        return self.graph.labels

    def vertex(self, label: str) -> int:
        """Vertex carrying the given role name."""
        for v, name in self.graph.labels.items():
            if name == label:
                return v
        raise KeyError(label)
