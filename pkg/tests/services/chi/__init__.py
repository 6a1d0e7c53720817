"""Tests for chi."""
