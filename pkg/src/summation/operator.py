"""
The linear operator T on R.

For f of degree e, expand f in m >= e+1 variables and form

    g(x) = f(x) + sum_i sum_{j=0}^{x_i - 1} f(x_1, ..., j, ..., x_m),

then read g back in the σ basis. The result does not depend on m inside
that range; m = e+1 is used unless the caller asks otherwise.

apply_T never builds g in full: f and g are carried on orbit keys
(non-increasing exponent tuples) and prefix_sum_orbits does the sums there.
sum_over_prefix is the same step on an explicit XPoly.
"""
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Mapping, Optional

from src.algebra.conversion import OrbitKey, orbit_representative, orbits_to_sigma, sigma_to_orbits
from src.algebra.errors import StableRangeError, VariableCountError
from src.algebra.sigma import SigmaPoly
from src.algebra.xpoly import XMonomial, XPoly
from src.summation.faulhaber import faulhaber_coefficient, faulhaber_coefficients

logger = logging.getLogger(__name__)


def sum_over_prefix(f: XPoly, i: int) -> XPoly:
    """
    Closed form of sum_{j=0}^{x_i - 1} f(x_1, ..., x_{i-1}, j, x_{i+1}, ..., x_m).

    Each power x_i^k is replaced by faulhaber(k) evaluated at x_i; at
    x_i = 0 the sum is empty and the result vanishes.

    Args:
        f: Polynomial in m variables
        i: Summation slot, 1 <= i <= m

    Raises:
        VariableCountError: If i is out of range
    """
    if not 1 <= i <= f.m:
        raise VariableCountError(f"Summation index {i} out of range 1..{f.m}")
    slot = i - 1
    out: Dict[XMonomial, Fraction] = {}
    for mono, coeff in f.terms.items():
        head, tail = mono[:slot], mono[slot + 1:]
        for power, a in faulhaber_coefficients(mono[slot]):
            key = head + (power,) + tail
            out[key] = out.get(key, 0) + coeff * a
    return XPoly._trusted(f.m, {k: v for k, v in out.items() if v})


def prefix_sum_orbits(orbits: Mapping[OrbitKey, Fraction]) -> Dict[OrbitKey, Fraction]:
    """
    f + sum_i sum_over_prefix(f, i) for symmetric f, on orbit keys.

    The coefficient of x^key in sum_over_prefix(f, i) is
    sum_a faulhaber_coefficient(a, key_i) * f[key with key_i -> a]. Slots
    holding equal values contribute equally, so each distinct value is
    summed once and weighted by its multiplicity.

    Args:
        orbits: Coefficients of f on its non-increasing monomials

    Returns:
        Coefficients of the result on its non-increasing monomials
    """
    if not orbits:
        return {}
    targets = set(orbits)
    for key in orbits:
        for value in set(key):
            slot = key.index(value)
            for power, _ in faulhaber_coefficients(value):
                targets.add(orbit_representative(key[:slot] + (power,) + key[slot + 1:]))

    top = max(key[0] for key in orbits)
    out: Dict[OrbitKey, Fraction] = {}
    for key in targets:
        total = orbits.get(key, Fraction(0))
        for value, multiplicity in Counter(key).items():
            # faulhaber(a) has no constant term.
            if not value:
                continue
            slot = key.index(value)
            for a in range(value - 1, top + 1):
                source = orbit_representative(key[:slot] + (a,) + key[slot + 1:])
                coeff = orbits.get(source)
                if coeff:
                    total += multiplicity * coeff * faulhaber_coefficient(a, value)
        if total:
            out[key] = total
    return out


def apply_T(f: SigmaPoly, variables: Optional[int] = None) -> SigmaPoly:
    """
    Apply T to f.

    Args:
        f: Element of R
        variables: Number of x variables to compute in; defaults to
            degree(f) + 1 (1 for constants). Must be >= degree(f) + 1.

    Returns:
        T(f), of degree at most degree(f) + 1

    Raises:
        StableRangeError: If variables < degree(f) + 1
    """
    if f.is_zero():
        return SigmaPoly.zero()
    e = int(f.degree())
    m = e + 1 if variables is None else variables
    if m < e + 1:
        raise StableRangeError(
            f"T needs at least {e + 1} variables for degree {e}, got {m}"
        )
    g = prefix_sum_orbits(sigma_to_orbits(f, m))
    result = orbits_to_sigma(g, m)
    logger.debug(
        "T: degree %d -> %s in %d variables (%d -> %d σ-terms)",
        e, result.degree(), m, len(f), len(result),
    )
    return result


def iterate_T(f: SigmaPoly, k: int) -> SigmaPoly:
    """T applied k times."""
    if k < 0:
        raise ValueError(f"Iteration count must be >= 0, got {k}")
    for _ in range(k):
        f = apply_T(f)
    return f
