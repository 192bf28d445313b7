"""Exact verification toolkit for del Pezzo surface arithmetic."""

__version__ = "0.1.0"
