"""Exact computations around Hodge theory on complex manifolds."""

__version__ = "0.1.0"
