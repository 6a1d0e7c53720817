"""Tests for families."""
