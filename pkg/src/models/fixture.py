"""
Published γ_n tables as loaded from the embedded fixture.
"""
from typing import List

from pydantic import BaseModel, ConfigDict, Field


class PublishedTable(BaseModel):
    """
    One published polynomial: n and its terms as raw fixture strings.

    Each entry reads "<σ index: exponent flow mapping> = <num>/<den>",
    e.g. "{1: 2, 2: 1} = 1/2".
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Number of marked points")
    terms: List[str] = Field(..., description="Raw term entries in canonical order")
