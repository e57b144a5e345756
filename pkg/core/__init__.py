"""Exact algebra: polynomials, ideals, neglex standard bases and the analysis engine."""
