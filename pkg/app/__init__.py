"""Exact distance graphs and generalised colouring numbers."""

__version__ = "0.1.0"
