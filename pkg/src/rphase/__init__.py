"""Exact verification of r-matrix phase-space constructions."""

__version__ = "0.1.0"
