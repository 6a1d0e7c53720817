"""Data models for colourings and signature vectors."""

from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

from .exceptions import InvalidColoringError


@dataclass(frozen=True, order=True)
class SignatureVector:
    """Values b(1..q); -1 marks a colour absent from the neighbourhood."""

    entries: Tuple[int, ...]
    max_value: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for value in self.entries:
            if value < -1 or (self.max_value is not None and value > self.max_value):
                raise InvalidColoringError(f"signature value {value} outside -1..{self.max_value}")

    @property
    def q(self) -> int:
        return len(self.entries)

    def __getitem__(self, colour: int) -> int:
        return self.entries[colour - 1]

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.entries) + "]"


LegendLabel = Union[int, Tuple[int, int], SignatureVector]


@dataclass(frozen=True)
class Coloring:
    """Vertex to colour-id map with an optional legend.

    Colour ids are positive integers. The legend maps each id to the
    structured colour it stands for.
    """

    assignment: Dict[int, int]
    legend: Dict[int, LegendLabel] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for v, c in self.assignment.items():
            if c < 1:
                raise InvalidColoringError(f"vertex {v} has non-positive colour {c}")
        if self.legend and not set(self.assignment.values()) <= set(self.legend):
            raise InvalidColoringError("legend does not cover every colour id")

    @classmethod
    def from_labels(cls, labels: Mapping[int, Hashable], sort_key=None) -> "Coloring":
        """Number structured labels 1, 2, ... in sorted order and keep them as legend."""
        distinct = sorted(set(labels.values()), key=sort_key)
        ids = {label: i for i, label in enumerate(distinct, start=1)}
        return cls(
            assignment={v: ids[label] for v, label in labels.items()},
            legend={i: label for label, i in ids.items()},
        )

    @classmethod
    def from_list(cls, colours: Iterable[int]) -> "Coloring":
        """Colouring of vertices 1..n from a sequence of colours."""
        return cls(assignment={v: c for v, c in enumerate(colours, start=1)})

    @property
    def palette_size(self) -> int:
        return len(set(self.assignment.values()))

    @property
    def colours(self) -> List[int]:
        return sorted(set(self.assignment.values()))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> Dict[int, List[int]]:
        result: Dict[int, List[int]] = {}
        for v in sorted(self.assignment):
            result.setdefault(self.assignment[v], []).append(v)
        return result


@dataclass(frozen=True)
class ProperCheck:
    """Outcome of a properness check."""

    proper: bool
    violation: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.proper
