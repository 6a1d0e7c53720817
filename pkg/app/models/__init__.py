"""Pydantic models for serialised bound reports."""
