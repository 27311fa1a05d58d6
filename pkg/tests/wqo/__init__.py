"""Tests for src/wqo modules."""
