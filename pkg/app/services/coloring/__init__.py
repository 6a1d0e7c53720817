"""Constructive colourings of exact distance graphs and a properness verifier."""

from .exact_distance import color_exact_distance_even, color_exact_distance_odd
from .greedy import greedy_back_coloring
from .io import format_coloring, parse_coloring, read_coloring, write_coloring
from .models import Coloring, ProperCheck, SignatureVector
from .signature import signature_coloring, signatures
from .verify import verify_proper

__all__ = [
    "Coloring",
    "ProperCheck",
    "SignatureVector",
    "color_exact_distance_even",
    "color_exact_distance_odd",
    "format_coloring",
    "greedy_back_coloring",
    "parse_coloring",
    "read_coloring",
    "signature_coloring",
    "signatures",
    "verify_proper",
    "write_coloring",
]
