"""Tests for decomp."""
