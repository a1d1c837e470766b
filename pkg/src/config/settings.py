"""
Configuration for the symmetric h⁰ engine.

This module holds the defaults shared by the library and the CLI:
verification ranges, fixture location and rendering symbols.

The tool is stateless: nothing is read from the environment or from a
config file. Command-line flags override these defaults per invocation.
"""
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    """
    Application defaults.

    Verification:
        default_n_max: Largest n checked by `verify` (default: 8)
        default_grid_bound: Largest exponent in the oracle grid (default: 2)
        binomial_x_max: Largest x in the binomial specialization check (default: 15)
        recursion_samples: Random points in the recursion check (default: 200)
        recursion_entry_bound: Largest entry of a sampled point (default: 3)
        recursion_seed: Seed making the sampled points reproducible
        verify_workers: Threads used by the oracle cross-check (1 = sequential)

    Data and rendering:
        published_tables_path: YAML fixture with the published γ_3 ... γ_8
        unicode_symbol: Symbol used for σ in text output
        ascii_symbol: Symbol used with --ascii
    """
    model_config = ConfigDict(frozen=True)

    default_n_max: int = Field(8, ge=3)
    default_grid_bound: int = Field(2, ge=0)
    binomial_x_max: int = Field(15, ge=0)
    recursion_samples: int = Field(200, ge=0)
    recursion_entry_bound: int = Field(3, ge=0)
    recursion_seed: int = Field(1995, ge=0)
    verify_workers: int = Field(1, ge=1)

    published_tables_path: Path = Path(__file__).resolve().parent.parent / "gamma" / "data" / "published_tables.yaml"
    unicode_symbol: str = "σ"
    ascii_symbol: str = "s"


# Global settings instance
settings = Settings()
