"""Difference ascent sequences and the objects in bijection (or injection)
with them: matrices, matchings, pattern-avoiding permutations, factorial
posets, restricted growth functions and rooted duplication trees."""

__version__ = "0.1.0"
