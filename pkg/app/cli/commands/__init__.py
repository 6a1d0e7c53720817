"""Subcommands registered on the root group."""

from .chi import chi, omega
from .coloring import color
from .decomp import bound, decomp
from .graphs import derive, gen
from .orders import colnum, order
from .verify import report, verify

COMMANDS = [gen, derive, order, colnum, color, chi, omega, decomp, bound, verify, report]

__all__ = ["COMMANDS"]
