"""Exact combinatorics of semi-infinite Lakshmibai-Seshadri paths for
twisted affine root systems."""

__version__ = "0.1.0"
