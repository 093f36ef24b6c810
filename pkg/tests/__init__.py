"""Tests for the indexdens package."""
