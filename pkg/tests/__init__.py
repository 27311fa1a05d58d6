"""Tests for the contraction toolkit."""
