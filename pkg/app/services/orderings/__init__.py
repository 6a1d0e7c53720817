"""Linear orders, back-sets and generalised colouring numbers."""

from .access import (
    AccessEvaluator,
    access_set,
    access_set_by_paths,
    access_sets,
    eval_colnum,
    weak_access_distance,
)
from .colnum import exact_colnum
from .heuristics import heuristic_order
from .io import format_order, parse_order, read_order, write_order
from .models import INFINITY, AccessKind, AccessType, LinearOrder, OrderStrategy
from .treedepth import treedepth_exact, treewidth_exact

__all__ = [
    "INFINITY",
    "AccessEvaluator",
    "AccessKind",
    "AccessType",
    "LinearOrder",
    "OrderStrategy",
    "access_set",
    "access_set_by_paths",
    "access_sets",
    "eval_colnum",
    "exact_colnum",
    "format_order",
    "heuristic_order",
    "parse_order",
    "read_order",
    "treedepth_exact",
    "treewidth_exact",
    "weak_access_distance",
    "write_order",
]
