"""Ensures the tests directory is importable (for the oracles module)."""
