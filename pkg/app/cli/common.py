"""Options, parameter types and error handling shared by the commands."""

import functools
from typing import Callable, Dict, Optional, Tuple

import click
from loguru import logger

from app.services.budget import BudgetExceededError
from app.services.chi import ChiError
from app.services.coloring.exceptions import ColoringError
from app.services.decomp.exceptions import DecompositionError
from app.services.families.exceptions import FamilyError
from app.services.graph_core import Graph, read_graph
from app.services.graph_core.exceptions import GraphCoreError
from app.services.orderings import INFINITY, LinearOrder, read_order
from app.services.orderings.exceptions import OrderingError
from app.services.verification import VerificationError

logger = logger.bind(name=__name__)

DOMAIN_ERRORS = (
    GraphCoreError,
    FamilyError,
    OrderingError,
    ColoringError,
    ChiError,
    DecompositionError,
    VerificationError,
    BudgetExceededError,
    OSError,
)


def handle_errors(command: Callable) -> Callable:
    """Turn domain errors into a one-line message and exit status 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except DOMAIN_ERRORS as e:
            logger.debug(f"{command.__name__} failed: {e!r}")
            raise click.ClickException(str(e)) from e

    return wrapper


class RadiusType(click.ParamType):
    """Positive integer or ``inf``."""

    name = "radius"

    def convert(self, value, param, ctx) -> Optional[int]:
        if value is None or value == INFINITY:
            return INFINITY
        if isinstance(value, int):
            return value
        if str(value).lower() in ("inf", "infinity"):
            return INFINITY
        try:
            radius = int(value)
        except ValueError:
            self.fail(f"{value!r} is neither a positive integer nor 'inf'", param, ctx)
        if radius < 1:
            self.fail(f"{value!r} is not positive", param, ctx)
        return radius


RADIUS = RadiusType()


def parse_assignments(pairs: Tuple[str, ...]) -> Dict[str, int]:
    """``k=3 p=5`` style parameters.

    Raises:
        click.BadParameter: On a malformed pair (exit status 2)
    """
    params: Dict[str, int] = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise click.BadParameter(f"{pair!r} is not NAME=VALUE", param_hint="PARAMS")
        try:
            params[name] = int(value)
        except ValueError:
            raise click.BadParameter(f"{pair!r} has a non-integer value", param_hint="PARAMS") from None
    return params


def load_graph(path: str) -> Graph:
    g = read_graph(path)
    logger.debug(f"Read {path}: n={g.n}, m={g.m}")
    return g


def load_order(path: str) -> LinearOrder:
    return read_order(path)


def emit(text: str, output: Optional[str]) -> None:
    """Write command output to ``output`` or stdout."""
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    logger.info(f"Wrote {output}")


output_option = click.option(
    "-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write to this file instead of stdout.",
)
graph_argument = click.argument("graph", type=click.Path(exists=True, dir_okay=False))
