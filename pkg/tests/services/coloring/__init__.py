"""Tests for coloring."""
