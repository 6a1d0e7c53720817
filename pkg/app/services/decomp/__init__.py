"""Ordered vertex partitions: width, flatness, contraction and bound formulas."""

from .bounds import BoundFormula, eval_bound_formula, formula_params
from .checks import check_decomposition, check_flat, flatness_profile, separating_number
from .contraction import contract, flatbound_order
from .io import format_decomposition, parse_decomposition, read_decomposition, write_decomposition
from .models import Decomposition, DecompositionCheck, FlatCheck, FlatnessProfile, FlatViolation, WidthMode
from .peeling import peel_shortest_paths

__all__ = [
    "BoundFormula",
    "Decomposition",
    "DecompositionCheck",
    "FlatCheck",
    "FlatViolation",
    "FlatnessProfile",
    "WidthMode",
    "check_decomposition",
    "check_flat",
    "contract",
    "eval_bound_formula",
    "flatbound_order",
    "flatness_profile",
    "format_decomposition",
    "parse_decomposition",
    "peel_shortest_paths",
    "read_decomposition",
    "separating_number",
    "write_decomposition",
]
