"""Exact computations in PM-monoids R_n and braid PM-monoids."""

__version__ = "0.1.0"
