"""Tests for src/props modules."""
