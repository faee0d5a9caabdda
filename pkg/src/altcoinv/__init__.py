"""Exact tools for alternating diagonal coinvariants and q,t-Catalan combinatorics."""

__version__ = "0.1.0"
