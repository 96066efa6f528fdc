"""Finite-group computations around extended quotients and equivariant measures."""

__version__ = "0.1.0"
