"""
Faulhaber polynomials: closed forms of sum_{j=0}^{X-1} j^k.

Built from the falling-factorial route
    sum_{j=0}^{X-1} C(j, i) = C(X, i+1)
applied to j^k = sum_i a_{k,i} C(j, i), so every intermediate is an
integer table entry or a binomial polynomial.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from src.algebra.xpoly import XPoly
from src.summation.falcoeff import falcoeff_table


@lru_cache(maxsize=None)
def binomial_polynomial(r: int) -> XPoly:
    """C(X, r) = X (X-1) ... (X-r+1) / r! as a polynomial in one variable."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    x = XPoly.variable(1, 1)
    product = XPoly.constant(1, 1)
    for t in range(r):
        product = product * (x - t)
    return product.scale(Fraction(1, factorial(r)))


@lru_cache(maxsize=None)
def faulhaber(k: int) -> XPoly:
    """
    The degree-(k+1) polynomial P with P(X) = sum_{j=0}^{X-1} j^k for X >= 0.

    P(0) = 0 (empty sum) and P(1) = 0^k, with 0^0 = 1.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = XPoly.zero(1)
    for i, a in enumerate(falcoeff_table.row(k)):
        if a:
            total = total + binomial_polynomial(i + 1).scale(a)
    return total


@lru_cache(maxsize=None)
def faulhaber_coefficients(k: int) -> Tuple[Tuple[int, Fraction], ...]:
    """(power, coefficient) pairs of faulhaber(k), for substitution loops."""
    return tuple((mono[0], coeff) for mono, coeff in faulhaber(k).terms.items())


@lru_cache(maxsize=None)
def faulhaber_coefficient(k: int, power: int) -> Fraction:
    """Coefficient of X^power in faulhaber(k)."""
    return faulhaber(k).coefficient((power,))
