"""``order`` and ``colnum``: heuristic orders and generalised colouring numbers."""

from typing import Optional

import click
from loguru import logger

from app.config import settings
from app.services.budget import BudgetExceededError, SearchBudget
from app.services.orderings import (
    AccessKind,
    AccessType,
    OrderStrategy,
    eval_colnum,
    exact_colnum,
    format_order,
    heuristic_order,
    write_order,
)

from ..common import RADIUS, emit, graph_argument, handle_errors, load_graph, load_order, output_option

logger = logger.bind(name=__name__)


@click.command()
@graph_argument
@click.option("--strategy", type=click.Choice([s.value for s in OrderStrategy]), default="degeneracy",
              show_default=True)
@click.option("--root", type=int, default=1, show_default=True, help="Start vertex for bfs and td-dfs.")
@output_option
@handle_errors
def order(graph: str, strategy: str, root: int, output: Optional[str]) -> None:
    """Write a heuristic linear order of GRAPH, smallest vertex first."""
    g = load_graph(graph)
    emit(format_order(heuristic_order(g, OrderStrategy(strategy), root)), output)


@click.command()
@graph_argument
@click.option("--kind", type=click.Choice([t.value for t in AccessType]), required=True)
@click.option("--k", "radius", type=RADIUS, required=True, help="Radius, or 'inf' for col and wcol.")
@click.option("--exact", is_flag=True, help="Minimise over all orders.")
@click.option("--order", "order_path", type=click.Path(exists=True, dir_okay=False),
              help="Evaluate on this order.")
@click.option("--witness", type=click.Path(dir_okay=False), help="With --exact, write the optimal order here.")
@click.option("--time-limit-ms", type=click.IntRange(min=1), default=None,
              help="Budget for --exact (default from settings).")
@output_option
@handle_errors
def colnum(graph: str, kind: str, radius: Optional[int], exact: bool, order_path: Optional[str],
           witness: Optional[str], time_limit_ms: Optional[int], output: Optional[str]) -> None:
    """Print col_k, wcol_k or dcol_k of GRAPH for an order or exactly.

    When the exact search runs out of budget the output is BOUNDS(lb,ub).
    """
    if exact == (order_path is not None):
        raise click.UsageError("give exactly one of --exact and --order")
    g = load_graph(graph)
    access = AccessKind(AccessType(kind), radius)
    if order_path is not None:
        emit(f"{eval_colnum(g, load_order(order_path), access)}\n", output)
        return
    budget = SearchBudget.from_ms(time_limit_ms, settings.search.colnum_time_limit_ms)
    try:
        value, L = exact_colnum(g, access, budget)
    except BudgetExceededError as e:
        upper, L = e.best
        logger.warning(f"{access}: search stopped at bounds [{e.lower_bound}, {upper}]")
        if witness:
            write_order(L, witness)
        emit(f"BOUNDS({e.lower_bound},{upper})\n", output)
        return
    if witness:
        write_order(L, witness)
    emit(f"{value}\n", output)
