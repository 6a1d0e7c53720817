"""Tests for graph_core."""
