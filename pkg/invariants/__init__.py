"""Invariants: Newton polyhedra, mixed multiplicities, lct and DP."""
