"""Symplectic ellipsoid embedding capacities in exact arithmetic."""

__version__ = "0.1.0"
