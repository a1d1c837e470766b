"""
Text, LaTeX and JSON rendering of σ-basis polynomials.
"""
