"""Exact verification workbench for generalized Turan problems on cycles and paths."""

__version__ = "0.1.0"
