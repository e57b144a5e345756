"""Console output components."""
