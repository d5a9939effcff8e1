"""Symbolic-numeric workbench for rank-2 isomonodromic families and their monodromy cubics."""

__version__ = "0.1.0"
