"""Exact character tables, p-blocks, and perfect-isometry certificates."""

__version__ = "0.1.0"
