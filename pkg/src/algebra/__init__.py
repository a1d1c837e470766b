"""Exact rational arithmetic and sparse polynomials in the x and σ bases."""
