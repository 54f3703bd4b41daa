"""Busy Beaver bounds, counterexample search for universal hypotheses, and shortest-proof search."""

__version__ = "0.1.0"
