"""Back-sets Q (weak), R (strong) and D (distance) of a linear order.

All three are evaluated by breadth-first searches restricted to the part of
the order above a vertex. For a vertex v, ``d_v`` is the distance from v
inside {v} together with every vertex after v.

- x is in Q_r(y) iff x <_L y and d_x(y) <= r.
- x is in R_r(y) iff x <_L y and a search from y that only passes through
  vertices after y reaches x within r steps.
- x is in D_k(y) iff x <_L y and some m >=_L y has d_x(m) <= floor(k/2)+1
  and d_x(m) + d_y(m) <= k. The two shortest paths joined at m form a walk
  satisfying the positional constraint, and shortcutting a repeated vertex
  only moves later vertices to earlier positions, so walks and simple paths
  give the same sets.

Every back-set of y depends only on the vertices before y, in order, and on
the set of vertices after it. The incremental ``AccessEvaluator`` exploits
that for both the order evaluation and the exact search.
"""

from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence

from app.services.graph_core import Graph

from .exceptions import OrderSizeMismatchError
from .models import AccessKind, AccessType, LinearOrder


def restricted_bfs(adj: Sequence[Sequence[int]], source: int, allowed: Sequence[bool], cutoff: int) -> Dict[int, int]:
    """Distances from ``source`` through vertices flagged in ``allowed``, up to ``cutoff``."""
    dist = {source: 0}
    frontier = deque([source])
    while frontier:
        v = frontier.popleft()
        d = dist[v]
        if d == cutoff:
            continue
        for w in adj[v]:
            if allowed[w] and w not in dist:
                dist[w] = d + 1
                frontier.append(w)
    return dist


class AccessEvaluator:
    """Places vertices one at a time and reports the back-set of each.

    Vertices not yet placed count as larger than every placed vertex. The
    order among them is irrelevant to back-sets of placed vertices.
    """

    def __init__(self, g: Graph, kind: AccessKind) -> None:
        self.g = g
        self.kind = kind
        self.radius = kind.effective_radius(g.n)
        self.half = self.radius // 2 + 1
        self.later = [True] * (g.n + 1)
        self.later[0] = False
        self.prefix: List[int] = []
        self.dist: Dict[int, Dict[int, int]] = {}

    def place(self, y: int) -> FrozenSet[int]:
        """Append y to the order and return its back-set."""
        self.later[y] = False
        allowed = self.later[:]
        allowed[y] = True
        dy = restricted_bfs(self.g.adjacency, y, allowed, self.radius)
        self.dist[y] = dy
        back = self._back_set(y, dy)
        self.prefix.append(y)
        return back

    def unplace(self) -> int:
        y = self.prefix.pop()
        del self.dist[y]
        self.later[y] = True
        return y

    def _back_set(self, y: int, dy: Dict[int, int]) -> FrozenSet[int]:
        r = self.radius
        kind = self.kind.kind
        if kind is AccessType.Q_WEAK:
            return frozenset(x for x in self.prefix if self.dist[x].get(y, r + 1) <= r)
        if kind is AccessType.R_STRONG:
            return self._strong(y)
        found = []
        for x in self.prefix:
            for m, a in self.dist[x].items():
                if a <= self.half and m in dy and a + dy[m] <= r:
                    found.append(x)
                    break
        return frozenset(found)

    def _strong(self, y: int) -> FrozenSet[int]:
        adj = self.g.adjacency
        seen = {y: 0}
        frontier = deque([y])
        hits = set()
        while frontier:
            v = frontier.popleft()
            d = seen[v]
            if d == self.radius:
                continue
            for w in adj[v]:
                if w in seen:
                    continue
                seen[w] = d + 1
                if self.later[w]:
                    frontier.append(w)
                elif w != y:
                    hits.add(w)
        return frozenset(hits)

    def reach(self, x: int, v: int) -> Optional[int]:
        """d_x(v) for a placed x."""
        return self.dist[x].get(v)


def _check(g: Graph, L: LinearOrder) -> None:
    if L.n != g.n:
        raise OrderSizeMismatchError(L.n, g.n)


def access_sets(g: Graph, L: LinearOrder, kind: AccessKind) -> Dict[int, FrozenSet[int]]:
    """Back-set of every vertex under L."""
    _check(g, L)
    evaluator = AccessEvaluator(g, kind)
    return {y: evaluator.place(y) for y in L}


def access_set(g: Graph, L: LinearOrder, kind: AccessKind, y: int) -> FrozenSet[int]:
    """Back-set of a single vertex y under L.

    Raises:
        VertexRangeError: If y is not a vertex of g
    """
    g.check_vertex(y)
    _check(g, L)
    evaluator = AccessEvaluator(g, kind)
    for v in L.earlier(y):
        evaluator.place(v)
    return evaluator.place(y)


def eval_colnum(g: Graph, L: LinearOrder, kind: AccessKind) -> int:
    """1 + the largest back-set under L."""
    return 1 + max((len(s) for s in access_sets(g, L, kind).values()), default=0)


def weak_access_distance(g: Graph, L: LinearOrder, y: int, x: int) -> Optional[int]:
    """Least k such that x is weakly k-accessible from y.

    Returns:
        0 when x = y, None when x is not before y or never accessible
    """
    g.check_vertex(x)
    g.check_vertex(y)
    _check(g, L)
    if x == y:
        return 0
    if not L.less(x, y):
        return None
    allowed = [False] + [L.rank[v] > L.rank[x] for v in g.vertices]
    return restricted_bfs(g.adjacency, x, allowed, g.n).get(y)


def access_set_by_paths(g: Graph, L: LinearOrder, kind: AccessKind, y: int) -> FrozenSet[int]:
    """Back-set of y by literal enumeration of simple paths.

    Exponential; the reference the breadth-first evaluators are checked against.
    """
    g.check_vertex(y)
    _check(g, L)
    r = kind.effective_radius(g.n)
    half = r // 2
    rank = L.rank
    found = set()
    # path[0] = y, path[-1] = candidate x; in x-first indexing z_i = path[s - i]
    path = [y]
    on_path = {y}

    def accepts(x: int) -> bool:
        s = len(path) - 1
        internal = path[1:-1]
        if kind.kind is AccessType.Q_WEAK:
            return all(rank[z] > rank[x] for z in internal)
        if kind.kind is AccessType.R_STRONG:
            return all(rank[z] > rank[y] for z in internal)
        if any(rank[z] < rank[x] for z in path[:-1]):
            return False
        return all(rank[path[s - i]] >= rank[y] for i in range(half + 1, s + 1))

    def extend() -> None:
        if len(path) - 1 == r:
            return
        for w in g.adjacency[path[-1]]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if rank[w] < rank[y] and w not in found and accepts(w):
                found.add(w)
            extend()
            path.pop()
            on_path.discard(w)

    extend()
    return frozenset(found)
