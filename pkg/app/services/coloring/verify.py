"""Properness check for colourings."""

from app.services.graph_core import Graph

from .exceptions import UncoloredVertexError
from .models import Coloring, ProperCheck


def verify_proper(h: Graph, c: Coloring) -> ProperCheck:
    """Check that no edge of h is monochromatic.

    Args:
        h: Graph the colouring must be proper on
        c: Colouring covering every vertex of h

    Returns:
        ProperCheck with the lexicographically first monochromatic edge on failure

    Raises:
        UncoloredVertexError: If some vertex of h has no colour
    """
    for v in h.vertices:
        if v not in c.assignment:
            raise UncoloredVertexError(v)
    for u, v in h.sorted_edges():
        if c.assignment[u] == c.assignment[v]:
            return ProperCheck(proper=False, violation=(u, v))
    return ProperCheck(proper=True)
