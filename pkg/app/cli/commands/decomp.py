"""``decomp`` subcommands and ``bound``."""

from typing import Optional, Tuple

import click

from app.services.decomp import (
    BoundFormula,
    FlatnessProfile,
    WidthMode,
    check_decomposition,
    check_flat,
    contract,
    eval_bound_formula,
    flatbound_order,
    format_decomposition,
    peel_shortest_paths,
    read_decomposition,
)
from app.services.graph_core import format_graph
from app.services.orderings import format_order

from ..common import emit, graph_argument, handle_errors, load_graph, output_option, parse_assignments

decomposition_argument = click.argument("decomposition", type=click.Path(exists=True, dir_okay=False))


@click.group()
def decomp() -> None:
    """Check, contract and order along ordered vertex partitions."""


@decomp.command("check")
@graph_argument
@decomposition_argument
@click.option("--mode", type=click.Choice([m.value for m in WidthMode]), default=WidthMode.AS_PRINTED.value,
              show_default=True, help="Residual graph the separating numbers are taken over.")
@output_option
@handle_errors
def check(graph: str, decomposition: str, mode: str, output: Optional[str]) -> None:
    """Print connectivity of the parts, the widths w_i and the width W."""
    result = check_decomposition(load_graph(graph), read_decomposition(decomposition), WidthMode(mode))
    lines = [
        f"connected\t{str(result.connected).lower()}",
        f"widths\t{' '.join(str(w) for w in result.widths)}",
        f"width\t{result.width}",
    ]
    emit("".join(line + "\n" for line in lines), output)


@decomp.command("flat")
@graph_argument
@decomposition_argument
@click.option("--a", "a", type=click.IntRange(min=0), default=2, show_default=True, help="Profile f(k) = a*k + b.")
@click.option("--b", "b", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--p", "p", type=click.IntRange(min=1), default=3, show_default=True,
              help="Target distance; the largest radius checked defaults to 2p-1.")
@click.option("--k-max", type=click.IntRange(min=0), default=None)
@output_option
@handle_errors
def flat(graph: str, decomposition: str, a: int, b: int, p: int, k_max: Optional[int],
         output: Optional[str]) -> None:
    """Check that every part meets every k-ball of its residual graph in at most a*k+b vertices.

    Exits with status 1 when a violation is found.
    """
    result = check_flat(load_graph(graph), read_decomposition(decomposition), FlatnessProfile.linear(a, b),
                        2 * p - 1 if k_max is None else k_max)
    if result.flat:
        emit("flat\n", output)
        return
    v = result.violation
    emit(f"violation\tpart={v.index}\tvertex={v.vertex}\tk={v.k}\tcount={v.count}\tbound={v.bound}\n", output)
    raise click.exceptions.Exit(1)


@decomp.command("contract")
@graph_argument
@decomposition_argument
@output_option
@handle_errors
def contract_command(graph: str, decomposition: str, output: Optional[str]) -> None:
    """Write the graph obtained by contracting every part to one vertex."""
    emit(format_graph(contract(load_graph(graph), read_decomposition(decomposition))), output)


@decomp.command("order")
@graph_argument
@decomposition_argument
@output_option
@handle_errors
def order_command(graph: str, decomposition: str, output: Optional[str]) -> None:
    """Write the part-major order: H_1 ascending, then H_2, and so on."""
    emit(format_order(flatbound_order(load_graph(graph), read_decomposition(decomposition))), output)


@decomp.command("peel")
@graph_argument
@output_option
@handle_errors
def peel(graph: str, output: Optional[str]) -> None:
    """Write a decomposition into successive shortest paths."""
    emit(format_decomposition(peel_shortest_paths(load_graph(graph))), output)


@click.command()
@click.option("--formula", type=click.Choice([f.value for f in BoundFormula]), required=True)
@click.argument("params", nargs=-1)
@handle_errors
def bound(formula: str, params: Tuple[str, ...]) -> None:
    """Evaluate a closed-form bound; PARAMS are NAME=VALUE pairs (e.g. k=5)."""
    click.echo(eval_bound_formula(BoundFormula(formula), parse_assignments(params)))
