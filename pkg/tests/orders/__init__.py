"""Tests for src/orders modules."""
