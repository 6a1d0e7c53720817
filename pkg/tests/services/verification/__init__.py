"""Tests for verification."""
