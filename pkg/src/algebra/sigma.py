"""
Polynomials in the graded variables σ_1, σ_2, ... (the ring R).

σ_d carries weight d; the degree of a SigmaPoly is the highest weight of
its monomials. Iteration and display use the canonical term order:
ascending weight, then descending exponent sequence (σ_1^2 before σ_2),
which is the order the published tables use.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator

from src.algebra.rational import RationalLike, to_rational
from src.algebra.xpoly import MINUS_INFINITY, Degree


class SigmaMonomial(BaseModel):
    """
    Product of σ_d^{e_d}, stored as sorted (d, e_d) pairs with e_d >= 1.

    The empty product is the monomial 1 (weight 0).
    """
    model_config = ConfigDict(frozen=True)

    powers: Tuple[Tuple[int, int], ...] = ()

    @field_validator("powers")
    @classmethod
    def _check_powers(cls, powers: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        indices = [d for d, _ in powers]
        if indices != sorted(set(indices)):
            raise ValueError(f"σ indices must be strictly increasing, got {indices}")
        for d, e in powers:
            if d < 1:
                raise ValueError(f"σ index must be >= 1, got {d}")
            if e < 1:
                raise ValueError(f"Stored σ exponent must be >= 1, got σ_{d}^{e}")
        return powers

    @classmethod
    def from_mapping(cls, powers: Mapping[int, int]) -> "SigmaMonomial":
        """Build from {d: e}; zero exponents are dropped."""
        return cls(powers=tuple(sorted((int(d), int(e)) for d, e in powers.items() if e)))

    @classmethod
    def from_partition(cls, parts: Tuple[int, ...]) -> "SigmaMonomial":
        """
        Monomial whose expansion leads with x^parts in lex order.

        For non-increasing a = (a_1, ..., a_m) this is
        σ_1^{a_1-a_2} σ_2^{a_2-a_3} ... σ_m^{a_m}.
        """
        padded = tuple(parts) + (0,)
        return cls.from_mapping({d: padded[d - 1] - padded[d] for d in range(1, len(parts) + 1)})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.powers)

    @property
    def weight(self) -> int:
        return sum(d * e for d, e in self.powers)

    @property
    def max_index(self) -> int:
        return self.powers[-1][0] if self.powers else 0

    def is_one(self) -> bool:
        return not self.powers

    def exponent_sequence(self, length: int) -> Tuple[int, ...]:
        """(e_1, ..., e_length), zero-padded."""
        table = self.as_dict()
        return tuple(table.get(d, 0) for d in range(1, length + 1))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        weight = self.weight
        return weight, tuple(-e for e in self.exponent_sequence(weight))

    def __mul__(self, other: "SigmaMonomial") -> "SigmaMonomial":
        merged = self.as_dict()
        for d, e in other.powers:
            merged[d] = merged.get(d, 0) + e
        return SigmaMonomial.from_mapping(merged)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"σ{d}" + (f"^{e}" if e > 1 else "") for d, e in self.powers)


ONE = SigmaMonomial()

SigmaTermsLike = Mapping[Union[SigmaMonomial, Tuple[Tuple[int, int], ...]], RationalLike]


class SigmaPoly:
    """
    Immutable sparse element of R = Q[σ_1, σ_2, ...].

    Attributes:
        terms: Read-only mapping SigmaMonomial -> non-zero Fraction
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: SigmaTermsLike = None):
        cleaned: Dict[SigmaMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, SigmaMonomial):
                mono = SigmaMonomial(powers=tuple(mono))
            value = to_rational(coeff)
            total = cleaned.get(mono, Fraction(0)) + value
            if total:
                cleaned[mono] = total
            else:
                cleaned.pop(mono, None)
        self._terms = MappingProxyType(cleaned)
        self._hash = None

    @classmethod
    def _trusted(cls, terms: Dict[SigmaMonomial, Fraction]) -> "SigmaPoly":
        poly = cls.__new__(cls)
        poly._terms = MappingProxyType(terms)
        poly._hash = None
        return poly

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[Tuple[int, int], ...], RationalLike]) -> "SigmaPoly":
        """
        Build from plain data, e.g. {(): 1, ((1, 2),): Fraction(1, 2)}.

        Keys may also be {d: e} dicts passed as tuples of their items.
        """
        return cls({SigmaMonomial.from_mapping(dict(k)): v for k, v in terms.items()})

    @classmethod
    def zero(cls) -> "SigmaPoly":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "SigmaPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: RationalLike) -> "SigmaPoly":
        return cls({ONE: value})

    @classmethod
    def sigma(cls, d: int, exponent: int = 1) -> "SigmaPoly":
        """The polynomial σ_d^exponent."""
        return cls({SigmaMonomial.from_mapping({d: exponent}): 1})

    @property
    def terms(self) -> Mapping[SigmaMonomial, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Degree:
        if not self._terms:
            return MINUS_INFINITY
        return max(mono.weight for mono in self._terms)

    def coefficient(self, mono: Union[SigmaMonomial, Mapping[int, int]]) -> Fraction:
        if not isinstance(mono, SigmaMonomial):
            mono = SigmaMonomial.from_mapping(mono)
        return self._terms.get(mono, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def items(self) -> List[Tuple[SigmaMonomial, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def monomials(self) -> List[SigmaMonomial]:
        return [mono for mono, _ in self.items()]

    def __iter__(self) -> Iterator[Tuple[SigmaMonomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other):
        if isinstance(other, SigmaPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SigmaPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "SigmaPoly":
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
        return SigmaPoly._trusted(out)

    __radd__ = __add__

    def __neg__(self) -> "SigmaPoly":
        return SigmaPoly._trusted({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other) -> "SigmaPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "SigmaPoly":
        return (-self) + other

    def scale(self, factor: RationalLike) -> "SigmaPoly":
        factor = to_rational(factor)
        if not factor:
            return SigmaPoly.zero()
        return SigmaPoly._trusted({mono: c * factor for mono, c in self._terms.items()})

    def __mul__(self, other) -> "SigmaPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, SigmaPoly):
            return NotImplemented
        out: Dict[SigmaMonomial, Fraction] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                mono = mono_a * mono_b
                out[mono] = out.get(mono, 0) + coeff_a * coeff_b
        return SigmaPoly._trusted({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = SigmaPoly.constant(other)
        if not isinstance(other, SigmaPoly):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            # Constants compare equal to ints and Fractions, so they hash alike.
            if not self._terms or set(self._terms) == {ONE}:
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "SigmaPoly(0)"
        return "SigmaPoly(" + " + ".join(f"{c}*{mono}" for mono, c in self.items()) + ")"
