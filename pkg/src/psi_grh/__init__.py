"""Explicit GRH-conditional bounds for the Chebyshev function of number fields."""

__version__ = "0.1.0"
