"""
Output models: the format selector and the JSON document schema.

The JSON document is the stable machine interface:
    {"n": 5, "degree": 2,
     "terms": [{"sigma": {}, "coeff": "1/1"}, {"sigma": {"1": 1}, "coeff": "3/2"}, ...]}
Coefficients are exact "num/den" strings, never floats.
"""
from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.algebra.rational import parse_rational


class OutputFormat(str, Enum):
    """Rendering targets for polynomials."""
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


class TermRecord(BaseModel):
    """One σ-monomial with its coefficient."""
    model_config = ConfigDict(frozen=True)

    sigma: Dict[str, int] = Field(..., description="σ index (as string) -> exponent")
    coeff: str = Field(..., description="Exact coefficient as num/den")

    @field_validator("coeff")
    @classmethod
    def _exact_fraction(cls, value: str) -> str:
        parse_rational(value)
        if "/" not in value:
            raise ValueError(f"Coefficient must be written as num/den, got {value!r}")
        return value


class GammaDocument(BaseModel):
    """Serialized γ_n."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Number of marked points")
    degree: int = Field(..., ge=0, description="Weighted degree of γ_n")
    terms: List[TermRecord] = Field(..., description="Terms in canonical order")
