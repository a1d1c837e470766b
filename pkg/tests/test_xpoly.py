"""
Unit tests for sparse x-basis polynomials.

Tests ensure:
- Zero coefficients are never stored
- Degree of the zero polynomial is the -inf sentinel
- Mismatched variable counts are rejected
"""
from fractions import Fraction

import pytest

from src.algebra.errors import VariableCountError
from src.algebra.xpoly import MINUS_INFINITY, XPoly, xpoly_arith


def x(m, i):
    return XPoly.variable(m, i)


class TestXPolyArith:
    """Test cases for xpoly_arith."""

    def test_cancellation_prunes_terms(self):
        """Test (x1 + x2) + (-x2) = x1 with no stored zero."""
        result = xpoly_arith(x(2, 1) + x(2, 2), -x(2, 2), "add")
        assert result == x(2, 1)
        assert (0, 1) not in result.terms
        assert len(result) == 1

    def test_product_of_variables(self):
        """Test x1 * x2 = x1x2."""
        result = xpoly_arith(x(2, 1), x(2, 2), "mul")
        assert dict(result.terms) == {(1, 1): Fraction(1)}

    def test_difference_of_squares(self):
        """Test (x1 + 1)(x1 - 1) = x1^2 - 1."""
        result = xpoly_arith(x(1, 1) + 1, x(1, 1) - 1, "mul")
        assert dict(result.terms) == {(2,): Fraction(1), (0,): Fraction(-1)}

    def test_mismatched_variable_counts(self):
        """Test that adding polynomials in different m raises."""
        with pytest.raises(VariableCountError):
            xpoly_arith(x(1, 1), x(2, 1), "add")

    def test_unknown_op(self):
        """Test that an unsupported op raises ValueError."""
        with pytest.raises(ValueError):
            xpoly_arith(x(1, 1), x(1, 1), "div")

    def test_degree_is_additive(self):
        """Test degree(p*q) = degree(p) + degree(q) for non-zero p, q."""
        p = x(3, 1) ** 2 + x(3, 2)
        q = x(3, 3) ** 3 - 4
        assert (p * q).degree() == p.degree() + q.degree() == 5

    def test_zero_degree_is_sentinel(self):
        """Test that the zero polynomial has degree -inf, distinct from 0."""
        zero = XPoly.zero(2)
        assert zero.degree() == MINUS_INFINITY
        assert zero.degree() != 0
        assert XPoly.constant(2, 7).degree() == 0
        assert (zero * x(2, 1)).degree() == zero.degree() + x(2, 1).degree()

    def test_constructor_drops_zero_coefficients(self):
        """Test that explicit zero coefficients are discarded."""
        poly = XPoly(2, {(1, 0): 0, (0, 1): 3})
        assert list(poly.terms) == [(0, 1)]

    def test_constructor_checks_monomial_length(self):
        """Test that a monomial of the wrong length is rejected."""
        with pytest.raises(VariableCountError):
            XPoly(2, {(1, 0, 0): 1})

    def test_power(self):
        """Test (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2."""
        result = (x(2, 1) + x(2, 2)) ** 2
        assert dict(result.terms) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


class TestXPolyEvaluation:
    """Test cases for evaluation and substitution."""

    def test_evaluate(self):
        """Test exact evaluation at an integer point."""
        poly = XPoly(2, {(2, 0): Fraction(1, 2), (0, 1): -3, (0, 0): 1})
        assert poly.evaluate([3, 2]) == Fraction(9, 2) - 6 + 1

    def test_evaluate_zero_to_the_zero_is_one(self):
        """Test that x^0 contributes 1 at x = 0."""
        assert XPoly.constant(1, 5).evaluate([0]) == 5

    def test_evaluate_wrong_length(self):
        """Test that a point of the wrong length raises."""
        with pytest.raises(VariableCountError):
            x(2, 1).evaluate([1])
