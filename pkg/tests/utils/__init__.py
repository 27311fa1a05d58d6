"""Tests for src/utils modules."""
