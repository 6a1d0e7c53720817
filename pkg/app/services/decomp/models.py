"""Data models for decompositions and flatness profiles."""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

from .exceptions import InvalidPartitionError, InvalidProfileError


class WidthMode(Enum):
    """Which residual graph the separating numbers are taken over.

    AS_PRINTED: components of G minus the parts before i, counting every
    part j <= i that receives an edge from the component outside H_j.
    CLOSED_REMOVAL: components of G minus the parts up to and including i.
    """

    AS_PRINTED = "as-printed"
    CLOSED_REMOVAL = "closed"


@dataclass(frozen=True)
class Decomposition:
    """Ordered partition of 1..n into non-empty parts H_1..H_l."""

    n: int
    parts: Tuple[FrozenSet[int], ...]
    part_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        owner = [0] * (self.n + 1)
        for index, part in enumerate(self.parts, start=1):
            if not part:
                raise InvalidPartitionError(f"part {index} is empty")
            for v in part:
                if not 1 <= v <= self.n:
                    raise InvalidPartitionError(f"vertex {v} outside 1..{self.n}")
                if owner[v]:
                    raise InvalidPartitionError(f"vertex {v} in parts {owner[v]} and {index}")
                owner[v] = index
        missing = [v for v in range(1, self.n + 1) if not owner[v]]
        if missing:
            raise InvalidPartitionError(f"vertex {missing[0]} in no part")
        object.__setattr__(self, "part_of", tuple(owner))

    @classmethod
    def of(cls, n: int, parts: Iterable[Iterable[int]]) -> "Decomposition":
        return cls(n=n, parts=tuple(frozenset(p) for p in parts))

    @classmethod
    def singletons(cls, order: Iterable[int]) -> "Decomposition":
        seq = list(order)
        return cls.of(len(seq), ([v] for v in seq))

    @property
    def length(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class FlatnessProfile:
    """Bound f(k) on how many vertices of a part a k-ball may contain.

    Either a table for k = 0..len-1 or the linear form f(k) = a*k + b.
    """

    table: Optional[Tuple[int, ...]] = None
    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if self.table is not None:
            if not self.table:
                raise InvalidProfileError("empty table")
            if any(y < x for x, y in zip(self.table, self.table[1:])):
                raise InvalidProfileError("table decreases")
        elif self.a < 0 or self.b < 1:
            raise InvalidProfileError(f"linear profile {self.a}k+{self.b} must be non-decreasing and positive")

    @classmethod
    def linear(cls, a: int, b: int) -> "FlatnessProfile":
        return cls(a=a, b=b)

    @classmethod
    def from_table(cls, values: Iterable[int]) -> "FlatnessProfile":
        return cls(table=tuple(values))

    def __call__(self, k: int) -> int:
        if self.table is None:
            return self.a * k + self.b
        if k >= len(self.table):
            raise InvalidProfileError(f"no value for radius {k}")
        return self.table[k]

    @property
    def k_max(self) -> Optional[int]:
        return None if self.table is None else len(self.table) - 1


@dataclass(frozen=True)
class DecompositionCheck:
    """Connectivity of the parts and the widths w_1..w_l with their maximum."""

    connected: bool
    widths: Tuple[int, ...]
    width: int
    mode: WidthMode


@dataclass(frozen=True)
class FlatViolation:
    """A radius-k ball around v meeting part ``index`` in too many vertices."""

    index: int
    vertex: int
    k: int
    count: int
    bound: int


@dataclass(frozen=True)
class FlatCheck:
    flat: bool
    violation: Optional[FlatViolation] = None

    def __bool__(self) -> bool:
        return self.flat

