"""
Conversion between the x basis and the elementary symmetric (σ) basis.

Expansion substitutes σ_d = sum of all squarefree degree-d monomials in
x_1..x_m. The reverse direction is the classical lex-leading-term
reduction: the lex-largest monomial x^a of a symmetric polynomial has
non-increasing exponents, and σ_1^{a_1-a_2} ... σ_m^{a_m} is the unique
σ-monomial whose expansion leads with x^a, so subtracting it strictly
lowers the leading term.

Both directions also run on orbit keys: only the non-increasing monomials
of a symmetric polynomial are kept, each standing for its permutations.
The coefficient of x^key in σ_{r_1} σ_{r_2} ... counts the 0/1 matrices
with row sums r and column sums key.
"""
import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from src.algebra.errors import NonSymmetricError, StableRangeError, VariableCountError
from src.algebra.sigma import SigmaMonomial, SigmaPoly
from src.algebra.xpoly import XMonomial, XPoly

logger = logging.getLogger(__name__)

# Non-increasing exponent tuple standing for all its permutations.
OrbitKey = Tuple[int, ...]


@lru_cache(maxsize=None)
def sigma_expand(d: int, m: int) -> XPoly:
    """
    Elementary symmetric polynomial σ_d in m variables.

    Returns the zero polynomial when d > m.
    """
    if d < 1 or m < 1:
        raise VariableCountError(f"sigma_expand needs d >= 1 and m >= 1, got d={d}, m={m}")
    terms: Dict[XMonomial, Fraction] = {}
    for chosen in combinations(range(m), d):
        mono = [0] * m
        for k in chosen:
            mono[k] = 1
        terms[tuple(mono)] = Fraction(1)
    return XPoly._trusted(m, terms)


@lru_cache(maxsize=None)
def expand_monomial(mono: SigmaMonomial, m: int) -> XPoly:
    """x-basis expansion of one σ-monomial, built by peeling one factor of the top index."""
    if mono.is_one():
        return XPoly.constant(m, 1)
    powers = mono.as_dict()
    top = mono.max_index
    powers[top] -= 1
    rest = SigmaMonomial.from_mapping(powers)
    return expand_monomial(rest, m) * sigma_expand(top, m)


def sigma_to_xpoly(f: SigmaPoly, m: int) -> XPoly:
    """
    Substitute the m-variable σ_d for every σ_d in f.

    σ_d with d > m contributes zero.
    """
    if m < 1:
        raise VariableCountError(f"Variable count must be >= 1, got {m}")
    result: Dict[XMonomial, Fraction] = {}
    for mono, coeff in f.terms.items():
        if mono.max_index > m:
            continue
        for x_mono, c in expand_monomial(mono, m).terms.items():
            total = result.get(x_mono, 0) + coeff * c
            if total:
                result[x_mono] = total
            else:
                result.pop(x_mono, None)
    return XPoly._trusted(m, result)


def is_symmetric(g: XPoly) -> bool:
    """True iff g is fixed by every adjacent transposition x_i <-> x_{i+1}."""
    terms = g.terms
    for i in range(g.m - 1):
        for mono, coeff in terms.items():
            if mono[i] == mono[i + 1]:
                continue
            swapped = mono[:i] + (mono[i + 1], mono[i]) + mono[i + 2:]
            if terms.get(swapped) != coeff:
                return False
    return True


def orbit_representative(exponents: Sequence[int]) -> OrbitKey:
    """Non-increasing rearrangement of an exponent tuple."""
    return tuple(sorted(exponents, reverse=True))


def _is_non_increasing(mono: XMonomial) -> bool:
    return all(mono[k] >= mono[k + 1] for k in range(len(mono) - 1))


def _partitions(total: int, parts: int, largest: int) -> Iterator[OrbitKey]:
    """Non-increasing tuples of `parts` entries in 0..largest summing to total, lex descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _choices(capacities: Tuple[int, ...], total: int) -> Iterator[Tuple[int, ...]]:
    """Tuples (k_1, ...) with 0 <= k_i <= capacities[i] and sum total."""
    if not capacities:
        if total == 0:
            yield ()
        return
    head, tail = capacities[0], capacities[1:]
    for k in range(min(head, total), -1, -1):
        for rest in _choices(tail, total - k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _zero_one_fillings(rows: Tuple[int, ...], columns: OrbitKey) -> int:
    """
    Number of 0/1 matrices with the given row sums and column sums.

    Equals the coefficient of x^columns in σ_{rows[0]} σ_{rows[1]} ...;
    columns is kept sorted since the count ignores column order.
    """
    if not rows:
        return int(not any(columns))
    row, rest = rows[0], rows[1:]
    groups = sorted(Counter(c for c in columns if c).items(), reverse=True)
    zeros = columns.count(0)
    total = 0
    for picks in _choices(tuple(count for _, count in groups), row):
        ways = 1
        reduced: List[int] = [0] * zeros
        for (value, count), k in zip(groups, picks):
            ways *= comb(count, k)
            reduced += [value] * (count - k) + [value - 1] * k
        total += ways * _zero_one_fillings(rest, orbit_representative(reduced))
    return total


@lru_cache(maxsize=None)
def orbit_expansion(mono: SigmaMonomial, m: int) -> Tuple[Tuple[OrbitKey, int], ...]:
    """
    (key, coefficient of x^key) for every non-increasing key in the
    m-variable expansion of mono, lex descending.

    Every other monomial of the expansion is a permutation of one of these
    with the same coefficient.
    """
    if m < 1:
        raise VariableCountError(f"Variable count must be >= 1, got {m}")
    rows = tuple(d for d, e in reversed(mono.powers) for _ in range(e))
    if rows and rows[0] > m:
        return ()
    expansion = []
    for key in _partitions(mono.weight, m, len(rows)):
        count = _zero_one_fillings(rows, key)
        if count:
            expansion.append((key, count))
    return tuple(expansion)


def sigma_to_orbits(f: SigmaPoly, m: int) -> Dict[OrbitKey, Fraction]:
    """Coefficients of sigma_to_xpoly(f, m) on its non-increasing monomials only."""
    out: Dict[OrbitKey, Fraction] = {}
    for mono, coeff in f.terms.items():
        for key, count in orbit_expansion(mono, m):
            out[key] = out.get(key, 0) + coeff * count
    return {key: value for key, value in out.items() if value}


def orbits_to_sigma(orbits: Mapping[OrbitKey, Fraction], m: int) -> SigmaPoly:
    """
    σ-basis form of the symmetric polynomial in m variables whose coefficient
    on each non-increasing x^key is orbits[key].

    Raises:
        VariableCountError: If a key does not have m entries
        StableRangeError: If a key has weight above m
    """
    remaining: Dict[OrbitKey, Fraction] = {key: value for key, value in orbits.items() if value}
    for key in remaining:
        if len(key) != m:
            raise VariableCountError(f"Orbit key {key} does not have {m} entries")
        if sum(key) > m:
            raise StableRangeError(
                f"Degree {sum(key)} exceeds variable count {m}; "
                "the σ representation is not determined"
            )
    result: Dict[SigmaMonomial, Fraction] = {}
    while remaining:
        lead = max(remaining)
        coeff = remaining[lead]
        mono = SigmaMonomial.from_partition(lead)
        result[mono] = coeff
        for key, count in orbit_expansion(mono, m):
            value = remaining.get(key, 0) - coeff * count
            if value:
                remaining[key] = value
            else:
                remaining.pop(key, None)
    return SigmaPoly._trusted(result)


def xpoly_to_sigma(g: XPoly) -> SigmaPoly:
    """
    Rewrite a symmetric polynomial in the σ basis.

    Args:
        g: Symmetric polynomial in m variables with degree(g) <= m

    Returns:
        The unique SigmaPoly f of degree <= m with sigma_to_xpoly(f, m) == g

    Raises:
        NonSymmetricError: If g is not symmetric
        StableRangeError: If degree(g) > m
    """
    if g.is_zero():
        return SigmaPoly.zero()
    m = g.m
    if not is_symmetric(g):
        raise NonSymmetricError("Polynomial is not symmetric in its variables")
    if g.degree() > m:
        raise StableRangeError(
            f"Degree {g.degree()} exceeds variable count {m}; "
            "the σ representation is not determined"
        )

    # Symmetric, so the non-increasing monomials determine g.
    orbits = {mono: coeff for mono, coeff in g.terms.items() if _is_non_increasing(mono)}
    result = orbits_to_sigma(orbits, m)
    logger.debug("Converted %d x-terms in %d variables to %d σ-terms", len(g), m, len(result))
    return result


def elementary_values(x: Sequence[int], top: int) -> List[int]:
    """[σ_0(x), σ_1(x), ..., σ_top(x)] as exact integers; σ_d(x) = 0 for d > len(x)."""
    values = [1] + [0] * top
    for v in x:
        for d in range(top, 0, -1):
            values[d] += v * values[d - 1]
    return values


def evaluate_sigma(f: SigmaPoly, x: Sequence[int]) -> Fraction:
    """
    Value of f at the point x, computed through the numeric σ_d(x).

    Entries may be any integers; no non-negativity check is made here.
    """
    if len(x) < 1:
        raise VariableCountError("Evaluation point must have at least one coordinate")
    top = max((mono.max_index for mono in f.terms), default=0)
    sigmas = elementary_values([int(v) for v in x], top)
    total = Fraction(0)
    for mono, coeff in f.terms.items():
        term = coeff
        for d, e in mono.powers:
            term *= sigmas[d] ** e
        total += term
    return total
