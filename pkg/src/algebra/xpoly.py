"""
Sparse multivariate polynomials in x_1, ..., x_m over the rationals.

A monomial is a tuple of m non-negative exponents; a polynomial maps
monomials to non-zero Fractions. Instances are immutable.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from src.algebra.errors import VariableCountError
from src.algebra.rational import RationalLike, to_rational

XMonomial = Tuple[int, ...]
Degree = Union[int, float]

# Degree of the zero polynomial. Absorbs addition and sits below every int,
# so degree(p * q) == degree(p) + degree(q) holds without special cases.
MINUS_INFINITY: float = float("-inf")


class XPoly:
    """
    Immutable sparse polynomial in a fixed number of variables.

    Attributes:
        m: Number of variables
        terms: Read-only mapping XMonomial -> non-zero Fraction
    """

    __slots__ = ("_m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[XMonomial, RationalLike] = None):
        if m < 0:
            raise VariableCountError(f"Variable count must be >= 0, got {m}")
        cleaned: Dict[XMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != m:
                raise VariableCountError(
                    f"Monomial {mono} has {len(mono)} exponents, expected {m}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"Negative exponent in monomial {mono}")
            value = to_rational(coeff)
            if value:
                cleaned[mono] = cleaned.get(mono, Fraction(0)) + value
                if not cleaned[mono]:
                    del cleaned[mono]
        self._m = m
        self._terms = MappingProxyType(cleaned)
        self._hash = None

    @classmethod
    def _trusted(cls, m: int, terms: Dict[XMonomial, Fraction]) -> "XPoly":
        """Wrap an already-clean dict without re-validating it (hot path)."""
        poly = cls.__new__(cls)
        poly._m = m
        poly._terms = MappingProxyType(terms)
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, m: int) -> "XPoly":
        return cls._trusted(m, {})

    @classmethod
    def constant(cls, m: int, value: RationalLike) -> "XPoly":
        return cls(m, {(0,) * m: value})

    @classmethod
    def variable(cls, m: int, i: int) -> "XPoly":
        """The polynomial x_i (1-based index)."""
        if not 1 <= i <= m:
            raise VariableCountError(f"Variable index {i} out of range 1..{m}")
        mono = tuple(1 if k == i - 1 else 0 for k in range(m))
        return cls._trusted(m, {mono: Fraction(1)})

    @property
    def m(self) -> int:
        return self._m

    @property
    def terms(self) -> Mapping[XMonomial, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Degree:
        """Maximum total degree; MINUS_INFINITY for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(mono) for mono in self._terms)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __iter__(self) -> Iterator[Tuple[XMonomial, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def _check_same_m(self, other: "XPoly") -> None:
        if self._m != other._m:
            raise VariableCountError(
                f"Variable counts differ: {self._m} vs {other._m}"
            )

    def _coerce(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            self._check_same_m(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return XPoly.constant(self._m, other)
        return NotImplemented

    def __add__(self, other) -> "XPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, 0) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return XPoly._trusted(self._m, out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly._trusted(self._m, {mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other) -> "XPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return (-self) + other

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_same_m(other)
        out: Dict[XMonomial, Fraction] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                mono = tuple(a + b for a, b in zip(mono_a, mono_b))
                out[mono] = out.get(mono, 0) + coeff_a * coeff_b
        return XPoly._trusted(self._m, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "XPoly":
        factor = to_rational(factor)
        if not factor:
            return XPoly.zero(self._m)
        return XPoly._trusted(self._m, {mono: c * factor for mono, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "XPoly":
        if exponent < 0:
            raise ValueError("Only non-negative powers are supported")
        result = XPoly.constant(self._m, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._m == other._m and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        """Exact value at a point of length m."""
        if len(point) != self._m:
            raise VariableCountError(
                f"Point has {len(point)} coordinates, expected {self._m}"
            )
        values = [to_rational(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for value, exp in zip(values, mono):
                if exp:
                    term *= value ** exp
            total += term
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return f"XPoly(m={self._m}, 0)"
        parts = []
        for mono, coeff in self:
            factors = [
                f"x{k + 1}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(mono) if e
            ]
            parts.append(f"{coeff}" + ("*" + "*".join(factors) if factors else ""))
        return f"XPoly(m={self._m}, " + " + ".join(parts) + ")"


def xpoly_arith(p: XPoly, q: XPoly, op: str) -> XPoly:
    """
    Add or multiply two polynomials over the same variables.

    Raises:
        VariableCountError: If p.m != q.m
        ValueError: If op is not "add" or "mul"
    """
    if p.m != q.m:
        raise VariableCountError(f"Variable counts differ: {p.m} vs {q.m}")
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"Unsupported polynomial operation: {op!r}")

