"""``gen`` and ``derive``: family generators and derived graphs."""

from typing import Optional, Tuple

import click

from app.services.families import FAMILY_PARAMS, Family, FamilySpec, generate
from app.services.graph_core import (
    ALL_ODD,
    UnionMode,
    exact_distance_graph,
    exact_power_graph,
    format_graph,
    odd_union_graph,
    power_graph,
)
from app.services.orderings import write_order

from ..common import emit, graph_argument, handle_errors, load_graph, output_option, parse_assignments

FAMILIES = {family.value: family for family in Family}
DERIVED = ("exact-distance", "exact-power", "power", "odd-union")


@click.command()
@click.argument("family", type=click.Choice(sorted(FAMILIES), case_sensitive=False))
@click.argument("params", nargs=-1)
@click.option("--base", type=click.Path(exists=True, dir_okay=False), help="Base graph for subdivision.")
@click.option("--order", "order_path", type=click.Path(dir_okay=False), help="Write the prescribed order here.")
@output_option
@handle_errors
def gen(family: str, params: Tuple[str, ...], base: Optional[str], order_path: Optional[str],
        output: Optional[str]) -> None:
    """Generate a FAMILY graph; PARAMS are NAME=VALUE pairs (e.g. k=3 p=5)."""
    chosen = FAMILIES[family.lower()]
    values = parse_assignments(params)
    unknown = set(values) - set(FAMILY_PARAMS[chosen])
    if unknown:
        raise click.BadParameter(
            f"{chosen.value} takes {', '.join(FAMILY_PARAMS[chosen]) or 'no parameters'}", param_hint="PARAMS"
        )
    if chosen is Family.SUBDIVISION and base is None:
        raise click.UsageError("subdivision needs --base")
    spec = FamilySpec(chosen, values, load_graph(base) if base else None)
    out = generate(spec)
    if order_path:
        if out.prescribed_order is None:
            raise click.UsageError(f"{chosen.value} has no prescribed order")
        write_order(out.prescribed_order, order_path)
    emit(format_graph(out.graph), output)


@click.command()
@click.argument("operation", type=click.Choice(DERIVED))
@graph_argument
@click.option("--p", "p", required=True, help="Distance parameter; 'all' for odd-union over every odd distance.")
@click.option("--mode", type=click.Choice([m.value for m in UnionMode]), default=UnionMode.DISTANCE.value,
              show_default=True, help="odd-union over exact distances or exact powers.")
@output_option
@handle_errors
def derive(operation: str, graph: str, p: str, mode: str, output: Optional[str]) -> None:
    """Write the exact-distance, exact-power, power or odd-union graph of GRAPH."""
    g = load_graph(graph)
    if p == "all":
        if operation != "odd-union":
            raise click.BadParameter("'all' is only valid for odd-union", param_hint="--p")
        value = ALL_ODD
    else:
        try:
            value = int(p)
        except ValueError:
            raise click.BadParameter(f"{p!r} is not an integer", param_hint="--p") from None
    if operation == "exact-distance":
        h = exact_distance_graph(g, value)
    elif operation == "exact-power":
        h = exact_power_graph(g, value)
    elif operation == "power":
        h = power_graph(g, value)
    else:
        h = odd_union_graph(g, value, UnionMode(mode))
    emit(format_graph(h), output)
