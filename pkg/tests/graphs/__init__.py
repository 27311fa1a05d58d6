"""Tests for src/graphs modules."""
