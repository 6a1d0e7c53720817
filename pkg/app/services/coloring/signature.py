"""Signature colouring of the odd-distance union.

An auxiliary colouring a avoids the colours of every weak back-set of radius
p. The signature of y records, for each auxiliary colour c, the weak access
distance from y of the vertex coloured c among y and its weak back-set of
radius floor(p/2), or -1 when no such vertex exists. At most one such vertex
carries each colour, so the signature is well defined.
"""

from typing import Dict, Optional

from loguru import logger

from app.services.graph_core import Graph
from app.services.orderings import AccessEvaluator, AccessKind, LinearOrder, eval_colnum

from .exact_distance import check_parity
from .exceptions import SignatureConflictError
from .greedy import greedy_back_coloring
from .models import Coloring, SignatureVector

logger = logger.bind(name=__name__)


def signatures(g: Graph, L: LinearOrder, p: int, q: Optional[int] = None) -> Dict[int, SignatureVector]:
    """Signature vector of every vertex.

    Args:
        g: Input graph
        L: Linear order
        p: Odd positive distance bound
        q: Vector length; defaults to eval_colnum(g, L, Q_WEAK radius p)

    Raises:
        ParityError: If p is not an odd positive integer
        SignatureConflictError: If two vertices read by one signature share a colour
    """
    check_parity("signature_coloring", p, odd=True)
    if q is None:
        q = eval_colnum(g, L, AccessKind.weak(p))
    a = greedy_back_coloring(g, L, AccessKind.weak(p))
    half = p // 2

    evaluator = AccessEvaluator(g, AccessKind.weak(half))
    result: Dict[int, SignatureVector] = {}
    for y in L:
        back = evaluator.place(y)
        entries = [-1] * q
        holder: Dict[int, int] = {}
        for x in sorted(back | {y}):
            c = a[x]
            if c in holder:
                raise SignatureConflictError(y, c, holder[c], x)
            holder[c] = x
            entries[c - 1] = 0 if x == y else evaluator.reach(x, y)
        result[y] = SignatureVector(tuple(entries), max_value=half)
    return result


def signature_coloring(g: Graph, L: LinearOrder, p: int) -> Coloring:
    """Proper colouring of the union of the exact distance-i graphs over odd i <= p.

    Also proper on the union of the exact i-powers over odd i <= p when the odd
    girth of g is at least p+1. Uses at most (floor(p/2)+2)^q colours with
    q = eval_colnum(g, L, Q_WEAK radius p). Colour ids number the distinct
    signatures in lexicographic order.
    """
    coloring = Coloring.from_labels(signatures(g, L, p))
    logger.debug(f"Signature colouring p={p}: {coloring.palette_size} signatures")
    return coloring
