"""
Input validation for n and exponent vectors.
"""
