"""Generators for the graph families and the G_t constructions."""

from .g4 import load_g4, structural_lower_bound, validate_g4
from .gadget import build_g5, build_gt
from .generators import generate, regular_tree, subdivide
from .models import FAMILY_PARAMS, Family, FamilyOutput, FamilySpec

__all__ = [
    "FAMILY_PARAMS",
    "Family",
    "FamilyOutput",
    "FamilySpec",
    "build_g5",
    "build_gt",
    "generate",
    "load_g4",
    "regular_tree",
    "structural_lower_bound",
    "subdivide",
    "validate_g4",
]
