"""Greedy colouring along a linear order against back-sets."""

from app.services.graph_core import Graph
from app.services.orderings import AccessKind, LinearOrder, access_sets

from .models import Coloring


def greedy_back_coloring(g: Graph, L: LinearOrder, kind: AccessKind) -> Coloring:
    """Colour vertices in L-order with the least colour missing from their back-set.

    Uses at most eval_colnum(g, L, kind) colours.
    """
    back = access_sets(g, L, kind)
    colour = {}
    for y in L:
        taken = {colour[x] for x in back[y]}
        c = 1
        while c in taken:
            c += 1
        colour[y] = c
    return Coloring(assignment=colour, legend={c: c for c in set(colour.values())})
