"""Data models for linear orders and accessibility kinds."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .exceptions import InvalidAccessKindError, InvalidOrderError

# Unbounded radius; evaluated as radius n since a path has fewer than n edges.
INFINITY = None


class AccessType(Enum):
    """The three back-set relations."""

    Q_WEAK = "wcol"
    R_STRONG = "col"
    D_DIST = "dcol"


class OrderStrategy(Enum):
    """Heuristic order constructions."""

    DEGENERACY = "degeneracy"
    BFS_ROOT = "bfs"
    TD_DFS = "td-dfs"


@dataclass(frozen=True)
class AccessKind:
    """An access relation together with its radius."""

    kind: AccessType
    radius: Optional[int] = INFINITY

    def __post_init__(self) -> None:
        if self.radius is INFINITY:
            if self.kind is AccessType.D_DIST:
                raise InvalidAccessKindError(self.kind.name, "INFINITY")
        elif self.radius < 0:
            raise InvalidAccessKindError(self.kind.name, self.radius)

    @classmethod
    def weak(cls, radius: Optional[int] = INFINITY) -> "AccessKind":
        return cls(AccessType.Q_WEAK, radius)

    @classmethod
    def strong(cls, radius: Optional[int] = INFINITY) -> "AccessKind":
        return cls(AccessType.R_STRONG, radius)

    @classmethod
    def distance(cls, radius: int) -> "AccessKind":
        return cls(AccessType.D_DIST, radius)

    def effective_radius(self, n: int) -> int:
        return n if self.radius is INFINITY else self.radius

    def __str__(self) -> str:
        r = "inf" if self.radius is INFINITY else str(self.radius)
        return f"{self.kind.value}_{r}"


@dataclass(frozen=True)
class LinearOrder:
    """A permutation of 1..n; earlier positions are smaller."""

    perm: Tuple[int, ...]
    rank: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.perm)
        rank = [-1] * (n + 1)
        for position, v in enumerate(self.perm):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise InvalidOrderError(f"vertex {v!r} outside 1..{n}")
            if rank[v] != -1:
                raise InvalidOrderError(f"vertex {v} appears twice")
            rank[v] = position
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def of(cls, seq: Iterable[int]) -> "LinearOrder":
        return cls(tuple(seq))

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __iter__(self) -> Iterator[int]:
        return iter(self.perm)

    def __len__(self) -> int:
        return len(self.perm)

    def less(self, x: int, y: int) -> bool:
        return self.rank[x] < self.rank[y]

    def minimum(self, vertices: Iterable[int]) -> int:
        return min(vertices, key=self.rank.__getitem__)

    def earlier(self, y: int) -> Sequence[int]:
        """Vertices strictly before y."""
        return self.perm[: self.rank[y]]
