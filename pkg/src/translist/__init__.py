"""Transfinite list structures separating quantifier-free list induction schemata."""

__version__ = "0.1.0"
