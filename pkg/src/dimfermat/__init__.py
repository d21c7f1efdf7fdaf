"""Exact verification toolkit for unexpected curves of diminished Fermat configurations."""

__version__ = "0.1.0"
