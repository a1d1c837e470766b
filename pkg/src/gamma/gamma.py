"""
γ_n = T^{n-3}(1) and the h⁰ values it computes.

γ_n(x_1, ..., x_n) = h⁰(M̄_{0,n}, L_1^{x_1} ⊗ ... ⊗ L_n^{x_n}) for non-negative
x. Higher cohomology of these bundles vanishes, so h⁰ equals the Euler
characteristic and is a symmetric polynomial of degree at most n-3.
"""
import logging
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from src.algebra.conversion import evaluate_sigma
from src.algebra.sigma import SigmaPoly
from src.gating.validator import InputValidator
from src.summation.operator import apply_T

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _gamma_cached(n: int) -> SigmaPoly:
    if n == 3:
        return SigmaPoly.one()
    previous = _gamma_cached(n - 1)
    result = apply_T(previous)
    logger.debug("γ_%d computed: degree %s, %d terms", n, result.degree(), len(result))
    return result


def gamma(n: int) -> SigmaPoly:
    """
    γ_n in the σ basis.

    Args:
        n: Number of marked points, n >= 3

    Returns:
        T applied n-3 times to the constant 1

    Raises:
        ValidationError: If n < 3
    """
    InputValidator.validate_n(n)
    return _gamma_cached(n)


def gamma_table(n_max: int) -> List[Tuple[int, SigmaPoly]]:
    """[(3, γ_3), ..., (n_max, γ_{n_max})]."""
    InputValidator.validate_n(n_max)
    return [(n, gamma(n)) for n in range(3, n_max + 1)]


def h0(n: int, x: Sequence[int]) -> int:
    """
    Dimension h⁰(M̄_{0,n}, ⊗ L_i^{x_i}).

    Args:
        n: Number of marked points, n >= 3
        x: n non-negative exponents

    Returns:
        The dimension, a non-negative integer

    Raises:
        ValidationError: On n < 3, wrong length or negative entries
    """
    InputValidator.validate_n(n)
    values = InputValidator.validate_exponents(x, length=n)
    value = evaluate_sigma(gamma(n), values)
    if value.denominator != 1 or value < 0:
        # A dimension; anything else means γ_n itself is wrong.
        raise ArithmeticError(f"h0({n}, {values}) evaluated to non-dimension {value}")
    return int(value)


def h0_single(n: int, x: int) -> int:
    """h⁰(M̄_{0,n}, L_1^x) = C(n-3+x, x)."""
    InputValidator.validate_n(n)
    InputValidator.validate_exponents([x])
    return comb(n - 3 + x, x)


@lru_cache(maxsize=None)
def h0_single_recursive(n: int, x: int) -> int:
    """
    h⁰(M̄_{0,n}, L_1^x) from the one-variable recursion

        h⁰(n, x) = sum_{j=0}^{x} h⁰(n-1, j),   h⁰(3, x) = 1.
    """
    InputValidator.validate_n(n)
    InputValidator.validate_exponents([x])
    if n == 3:
        return 1
    return sum(h0_single_recursive(n - 1, j) for j in range(x + 1))


def h0_p1(x: Sequence[int]) -> int:
    """
    γ_4 from geometry: M̄_{0,4} is ℙ¹ and every L_i is O(1), so
    h⁰ = h⁰(ℙ¹, O(x_1 + x_2 + x_3 + x_4)) = 1 + sum x_i.
    """
    values = InputValidator.validate_exponents(x, length=4)
    return 1 + sum(values)
