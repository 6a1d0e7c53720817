"""Tests for orderings."""
