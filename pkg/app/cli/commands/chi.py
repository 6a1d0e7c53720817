"""``chi`` and ``omega``: exact chromatic and clique numbers."""

from typing import Optional

import click

from app.config import settings
from app.services.budget import SearchBudget
from app.services.chi import chromatic_number, clique_number
from app.services.coloring import write_coloring

from ..common import emit, graph_argument, handle_errors, load_graph, output_option

budget_option = click.option("--budget-ms", type=click.IntRange(min=1), default=None,
                             help="Search budget (default from settings).")


@click.command()
@graph_argument
@budget_option
@click.option("--lower-bound", type=click.IntRange(min=0), default=None,
              help="Certified lower bound known from the structure of GRAPH.")
@click.option("--witness", type=click.Path(dir_okay=False), help="Write the best colouring here.")
@output_option
@handle_errors
def chi(graph: str, budget_ms: Optional[int], lower_bound: Optional[int], witness: Optional[str],
        output: Optional[str]) -> None:
    """Print the chromatic number of GRAPH, or BOUNDS(lb,ub) when the budget runs out."""
    h = load_graph(graph)
    result = chromatic_number(
        h,
        budget=SearchBudget.from_ms(budget_ms, settings.search.chi_time_limit_ms),
        lower_bound=lower_bound,
        lower_bound_source="command line",
    )
    if witness:
        write_coloring(result.witness, witness)
    emit(f"{result}\n", output)


@click.command()
@graph_argument
@budget_option
@output_option
@handle_errors
def omega(graph: str, budget_ms: Optional[int], output: Optional[str]) -> None:
    """Print the clique number of GRAPH and a witness clique on the second line."""
    h = load_graph(graph)
    result = clique_number(h, budget=SearchBudget.from_ms(budget_ms, settings.search.clique_time_limit_ms))
    emit(f"{result}\n{' '.join(str(v) for v in result.witness)}\n", output)
