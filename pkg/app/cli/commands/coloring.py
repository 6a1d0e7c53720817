"""``color``: the constructive colourings."""

from typing import Optional

import click
from loguru import logger

from app.services.coloring import (
    color_exact_distance_even,
    color_exact_distance_odd,
    format_coloring,
    greedy_back_coloring,
    signature_coloring,
)
from app.services.orderings import AccessKind, AccessType

from ..common import RADIUS, emit, graph_argument, handle_errors, load_graph, load_order, output_option

logger = logger.bind(name=__name__)

METHODS = ("thm10-odd", "thm10-even", "thm11", "greedy")
# older names, still accepted
METHOD_ALIASES = {"exact-odd": "thm10-odd", "exact-even": "thm10-even", "signature": "thm11"}


@click.command()
@graph_argument
@click.option("--method", type=click.Choice([*METHODS, *METHOD_ALIASES]), required=True,
              help="thm10-odd / thm10-even colour the exact distance-p graph, thm11 the odd union, "
                   "greedy colours against back-sets.")
@click.option("--order", "order_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--p", "p", type=click.IntRange(min=1), help="Distance parameter (not for greedy).")
@click.option("--kind", type=click.Choice([t.value for t in AccessType]), default="wcol", show_default=True,
              help="Back-set kind for greedy.")
@click.option("--k", "radius", type=RADIUS, default=None, help="Back-set radius for greedy.")
@output_option
@handle_errors
def color(graph: str, method: str, order_path: str, p: Optional[int], kind: str, radius: Optional[int],
          output: Optional[str]) -> None:
    """Colour GRAPH along the order and write the colouring with its legend."""
    method = METHOD_ALIASES.get(method, method)
    g = load_graph(graph)
    L = load_order(order_path)
    if method == "greedy":
        if radius is None:
            raise click.UsageError("greedy needs --k")
        coloring = greedy_back_coloring(g, L, AccessKind(AccessType(kind), radius))
    else:
        if p is None:
            raise click.UsageError(f"{method} needs --p")
        if method == "thm10-odd":
            coloring = color_exact_distance_odd(g, L, p)
        elif method == "thm10-even":
            coloring = color_exact_distance_even(g, L, p)
        else:
            coloring = signature_coloring(g, L, p)
    logger.info(f"{method}: {coloring.palette_size} colours on {g.n} vertices")
    emit(format_coloring(coloring), output)
