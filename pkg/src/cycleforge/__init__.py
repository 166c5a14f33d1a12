"""Exact and numerical tools for a Leslie-type predator-prey model with a
generalized Holling III response: polynomial arithmetic, certified root
isolation, elimination certificates, focal values and limit-cycle census."""

__version__ = "0.1.0"
