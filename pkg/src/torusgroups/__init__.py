"""Braid monodromy presentations of plane sextics and the exact geometry of
their double-covering construction."""

__version__ = "0.1.0"
