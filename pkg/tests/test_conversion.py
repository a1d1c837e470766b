"""
Unit and property tests for σ-basis types and basis conversion.

Tests ensure:
- σ_d expands to the sum of squarefree degree-d monomials
- x -> σ conversion inverts σ -> x in the stable range
- Orbit-key conversion agrees with the full x expansion
- Non-symmetric or over-degree input is rejected
- Numeric evaluation agrees with expansion
"""
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from src.algebra.conversion import (
    evaluate_sigma,
    expand_monomial,
    is_symmetric,
    orbit_expansion,
    orbit_representative,
    orbits_to_sigma,
    sigma_expand,
    sigma_to_orbits,
    sigma_to_xpoly,
    xpoly_to_sigma,
)
from src.algebra.errors import NonSymmetricError, StableRangeError, VariableCountError
from src.algebra.sigma import SigmaMonomial, SigmaPoly
from src.algebra.xpoly import MINUS_INFINITY, XPoly
from src.gamma.gamma import gamma
from tests.strategies import sigma_monomials, sigma_polys

S1 = SigmaPoly.sigma(1)
S2 = SigmaPoly.sigma(2)
S3 = SigmaPoly.sigma(3)


def x(m, i):
    return XPoly.variable(m, i)


class TestSigmaMonomial:
    """Test cases for SigmaMonomial invariants."""

    def test_weight(self):
        """Test weight = sum d * e_d."""
        assert SigmaMonomial.from_mapping({1: 2, 3: 1}).weight == 5
        assert SigmaMonomial().weight == 0

    def test_zero_exponents_dropped(self):
        """Test that absent and zero exponents mean the same monomial."""
        assert SigmaMonomial.from_mapping({1: 1, 2: 0}) == SigmaMonomial.from_mapping({1: 1})

    def test_invalid_powers_rejected(self):
        """Test that stored exponents must be >= 1 and indices >= 1."""
        with pytest.raises(ValueError):
            SigmaMonomial(powers=((1, 0),))
        with pytest.raises(ValueError):
            SigmaMonomial(powers=((0, 1),))
        with pytest.raises(ValueError):
            SigmaMonomial(powers=((2, 1), (1, 1)))

    def test_from_partition(self):
        """Test that (3, 1, 1) leads σ1^2 σ3."""
        assert SigmaMonomial.from_partition((3, 1, 1)) == SigmaMonomial.from_mapping({1: 2, 3: 1})

    def test_canonical_order_matches_published_layout(self):
        """Test ascending weight, then σ1^2 before σ2 and σ1σ2 before σ3."""
        poly = SigmaPoly.from_terms({
            ((3, 1),): 2, ((1, 1), (2, 1)): 1, ((1, 3),): 1,
            ((2, 1),): 1, ((1, 2),): 1, ((1, 1),): 1, (): 1,
        })
        assert [m.as_dict() for m in poly.monomials()] == [
            {}, {1: 1}, {1: 2}, {2: 1}, {1: 3}, {1: 1, 2: 1}, {3: 1},
        ]


class TestSigmaPoly:
    """Test cases for SigmaPoly arithmetic."""

    def test_zero_degree_sentinel(self):
        """Test degree of zero is -inf and of a constant is 0."""
        assert SigmaPoly.zero().degree() == MINUS_INFINITY
        assert SigmaPoly.one().degree() == 0

    def test_degree_is_highest_weight(self):
        """Test degree(σ1 + σ2σ3) = 5."""
        assert (S1 + S2 * S3).degree() == 5

    def test_cancellation(self):
        """Test that f - f is the zero polynomial with no terms."""
        f = S1 * Fraction(3, 2) + S2
        assert (f - f).is_zero()
        assert len(f - f) == 0

    def test_coefficient_lookup(self):
        """Test coefficient by mapping and by monomial."""
        f = S1 * S1 * Fraction(1, 2) + 1
        assert f.coefficient({1: 2}) == Fraction(1, 2)
        assert f.constant_term == 1
        assert f.coefficient({2: 1}) == 0

    def test_constants_hash_like_numbers(self):
        """Test constants equal to an int or Fraction share its hash."""
        assert SigmaPoly.one() == 1
        assert hash(SigmaPoly.one()) == hash(1)
        assert len({SigmaPoly.one(), 1}) == 1
        assert hash(SigmaPoly.constant(Fraction(3, 2))) == hash(Fraction(3, 2))
        assert hash(SigmaPoly.zero()) == hash(0)

    def test_non_constant_hash_stable(self):
        """Test equal non-constant polynomials hash alike."""
        assert hash(S1 + S2) == hash(S2 + S1)


class TestSigmaExpand:
    """Test cases for sigma_expand."""

    def test_sigma1(self):
        """Test σ1 in 3 variables is x1 + x2 + x3."""
        assert sigma_expand(1, 3) == x(3, 1) + x(3, 2) + x(3, 3)

    def test_top_sigma(self):
        """Test σ3 in 3 variables is x1x2x3."""
        assert sigma_expand(3, 3) == XPoly(3, {(1, 1, 1): 1})

    def test_beyond_variable_count_is_zero(self):
        """Test σ4 in 3 variables vanishes."""
        assert sigma_expand(4, 3).is_zero()

    def test_term_count_is_binomial(self):
        """Test σ_d in m variables has C(m, d) terms."""
        assert len(sigma_expand(2, 5)) == 10
        assert len(sigma_expand(3, 6)) == 20


class TestSigmaToXPoly:
    """Test cases for sigma_to_xpoly."""

    def test_gamma4(self):
        """Test 1 + σ1 in 2 variables."""
        assert sigma_to_xpoly(1 + S1, 2) == 1 + x(2, 1) + x(2, 2)

    def test_vanishing_sigma(self):
        """Test σ2 in 1 variable is zero."""
        assert sigma_to_xpoly(S2, 1).is_zero()

    def test_square(self):
        """Test σ1^2 in 2 variables."""
        assert sigma_to_xpoly(S1 * S1, 2) == XPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})

    @given(sigma_polys(), st.integers(min_value=1, max_value=5))
    @hyp_settings(max_examples=40, deadline=None)
    def test_expansion_is_symmetric(self, f, m):
        """Test that every expansion passes is_symmetric."""
        assert is_symmetric(sigma_to_xpoly(f, m))

    @given(sigma_monomials(max_weight=5))
    @hyp_settings(max_examples=40, deadline=None)
    def test_monomial_expansion_is_homogeneous_of_its_weight(self, mono):
        """Test that a weight-w σ-monomial expands to total degree exactly w."""
        expansion = sigma_to_xpoly(SigmaPoly({mono: 1}), max(mono.weight, 1))
        assert {sum(exps) for exps in expansion.terms} == {mono.weight}


class TestXPolyToSigma:
    """Test cases for xpoly_to_sigma."""

    def test_sigma1(self):
        """Test x1 + x2 -> σ1."""
        assert xpoly_to_sigma(x(2, 1) + x(2, 2)) == S1

    def test_power_sum(self):
        """Test x1^2 + x2^2 -> σ1^2 - 2σ2."""
        assert xpoly_to_sigma(x(2, 1) ** 2 + x(2, 2) ** 2) == S1 * S1 - S2 * 2

    def test_top_sigma(self):
        """Test x1x2x3 -> σ3."""
        assert xpoly_to_sigma(XPoly(3, {(1, 1, 1): 1})) == S3

    def test_zero(self):
        """Test the zero polynomial converts to zero."""
        assert xpoly_to_sigma(XPoly.zero(3)).is_zero()

    def test_non_symmetric_rejected(self):
        """Test that x1 in two variables raises NonSymmetricError."""
        with pytest.raises(NonSymmetricError):
            xpoly_to_sigma(x(2, 1))

    def test_degree_above_variable_count_rejected(self):
        """Test that degree(g) > m raises StableRangeError."""
        with pytest.raises(StableRangeError):
            xpoly_to_sigma(x(1, 1) ** 2)

    @given(sigma_polys(max_weight=4), st.integers(min_value=0, max_value=2))
    @hyp_settings(max_examples=60, deadline=None)
    def test_round_trip(self, f, extra):
        """Test xpoly_to_sigma(sigma_to_xpoly(f, m)) == f for every m >= degree(f)."""
        m = int(max(f.degree(), 1)) + extra
        assert xpoly_to_sigma(sigma_to_xpoly(f, m)) == f

    @given(sigma_polys(max_weight=4))
    @hyp_settings(max_examples=40, deadline=None)
    def test_degree_preserved(self, f):
        """Test degree(sigma_to_xpoly(f, m)) == degree(f) for m >= degree(f)."""
        if f.is_zero():
            return
        m = max(int(f.degree()), 1)
        assert sigma_to_xpoly(f, m).degree() == f.degree()


class TestOrbitExpansion:
    """Test cases for conversion on non-increasing exponent tuples."""

    def test_representative(self):
        """Test exponents are sorted non-increasing."""
        assert orbit_representative((0, 2, 1, 2)) == (2, 2, 1, 0)

    def test_sigma1_cubed(self):
        """Test σ1^3 in 3 variables: x1^3, 3 x1^2 x2, 6 x1 x2 x3."""
        mono = SigmaMonomial.from_mapping({1: 3})
        assert dict(orbit_expansion(mono, 3)) == {(3, 0, 0): 1, (2, 1, 0): 3, (1, 1, 1): 6}

    def test_one(self):
        """Test the monomial 1 is the single zero key."""
        assert orbit_expansion(SigmaMonomial(), 4) == (((0, 0, 0, 0), 1),)

    def test_index_above_variable_count_vanishes(self):
        """Test σ3 in 2 variables has no terms."""
        assert orbit_expansion(SigmaMonomial.from_mapping({3: 1}), 2) == ()

    @given(sigma_monomials(max_weight=5), st.integers(min_value=1, max_value=5))
    @hyp_settings(max_examples=60, deadline=None)
    def test_agrees_with_full_expansion(self, mono, m):
        """Test orbit coefficients equal the full expansion on non-increasing monomials."""
        full = expand_monomial(mono, m)
        expected = {
            key: coeff for key, coeff in full.terms.items()
            if orbit_representative(key) == key
        }
        assert {key: Fraction(c) for key, c in orbit_expansion(mono, m)} == expected

    @given(sigma_polys(max_weight=5, max_terms=5), st.integers(min_value=0, max_value=2))
    @hyp_settings(max_examples=40, deadline=None)
    def test_round_trip(self, f, extra):
        """Test orbits_to_sigma inverts sigma_to_orbits in the stable range."""
        m = int(max(f.degree(), 1)) + extra
        assert orbits_to_sigma(sigma_to_orbits(f, m), m) == f

    def test_matches_xpoly_route(self):
        """Test the orbit route and the full x route agree on γ7."""
        f = gamma(7)
        assert xpoly_to_sigma(sigma_to_xpoly(f, 5)) == orbits_to_sigma(sigma_to_orbits(f, 5), 5)

    def test_over_degree_rejected(self):
        """Test a key of weight above m raises StableRangeError."""
        with pytest.raises(StableRangeError):
            orbits_to_sigma({(2, 1): Fraction(1)}, 2)

    def test_wrong_length_rejected(self):
        """Test a key of the wrong length raises VariableCountError."""
        with pytest.raises(VariableCountError):
            orbits_to_sigma({(1, 0): Fraction(1)}, 3)


class TestIsSymmetric:
    """Test cases for is_symmetric."""

    def test_sum(self):
        """Test x1 + x2 is symmetric."""
        assert is_symmetric(x(2, 1) + x(2, 2))

    def test_single_variable_of_two(self):
        """Test x1 in two variables is not symmetric."""
        assert not is_symmetric(x(2, 1))

    def test_symmetrized_monomial(self):
        """Test x1^2 x2 + x1 x2^2 is symmetric."""
        assert is_symmetric(XPoly(2, {(2, 1): 1, (1, 2): 1}))

    def test_cyclic_but_not_symmetric(self):
        """Test a cyclically invariant polynomial that fails a transposition."""
        cyclic = XPoly(3, {(2, 1, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1})
        assert not is_symmetric(cyclic)

    def test_unequal_coefficients(self):
        """Test that matching monomials with different coefficients fail."""
        assert not is_symmetric(XPoly(2, {(1, 0): 1, (0, 1): 2}))


class TestEvaluateSigma:
    """Test cases for evaluate_sigma."""

    def test_gamma4(self):
        """Test 1 + σ1 at (1, 2, 3, 4) is 11."""
        assert evaluate_sigma(1 + S1, [1, 2, 3, 4]) == 11

    def test_zero_point(self):
        """Test σ2 at the origin is 0."""
        assert evaluate_sigma(S2, [0, 0, 0]) == 0

    def test_gamma5_at_ones(self):
        """Test γ5 = 1 + 3/2 σ1 + 1/2 σ1^2 + σ2 at (1, 1, 1, 1, 1) is 31."""
        gamma5 = 1 + S1 * Fraction(3, 2) + S1 * S1 * Fraction(1, 2) + S2
        assert evaluate_sigma(gamma5, [1, 1, 1, 1, 1]) == 31

    def test_sigma_beyond_length_is_zero(self):
        """Test σ3 at a two-entry point is zero."""
        assert evaluate_sigma(S3 + 1, [5, 7]) == 1

    def test_negative_entries_allowed(self):
        """Test unrestricted evaluation at negative integers."""
        assert evaluate_sigma(S1 * S2, [-1, 2]) == (1) * (-2)

    @given(
        sigma_polys(),
        sigma_polys(),
        st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5),
    )
    @hyp_settings(max_examples=60, deadline=None)
    def test_homomorphism(self, f, g, point):
        """Test evaluation respects sums and products."""
        assert evaluate_sigma(f + g, point) == evaluate_sigma(f, point) + evaluate_sigma(g, point)
        assert evaluate_sigma(f * g, point) == evaluate_sigma(f, point) * evaluate_sigma(g, point)

    @given(sigma_polys(), st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=4))
    @hyp_settings(max_examples=40, deadline=None)
    def test_agrees_with_expansion(self, f, point):
        """Test numeric σ evaluation matches evaluating the x expansion."""
        assert evaluate_sigma(f, point) == sigma_to_xpoly(f, len(point)).evaluate(point)

    def test_permutation_invariance(self):
        """Test that evaluation ignores the order of the point."""
        f = S1 * S3 + S2 * S2 * Fraction(1, 3)
        values = {evaluate_sigma(f, list(p)) for p in permutations([0, 1, 2, 5])}
        assert len(values) == 1
