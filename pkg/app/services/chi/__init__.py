"""Exact chromatic number and clique number oracles."""

from .clique import clique_number, greedy_clique
from .dsatur import chromatic_number, dsatur_greedy, exhaustive_k_colorable
from .exceptions import ChiError, InconsistentBoundError
from .models import ChiResult, ChiStatus, CliqueResult

__all__ = [
    "ChiResult",
    "ChiStatus",
    "ChiError",
    "CliqueResult",
    "InconsistentBoundError",
    "chromatic_number",
    "clique_number",
    "dsatur_greedy",
    "exhaustive_k_colorable",
    "greedy_clique",
]
