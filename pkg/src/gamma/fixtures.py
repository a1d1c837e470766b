"""
Loader for the published γ_n tables.

The tables are kept in a YAML data file rather than inline code so the
transcription can be reviewed in one place. Each record is validated
into a PublishedTable and parsed into an exact SigmaPoly.
"""
import os
import re
from pathlib import Path
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import yaml

from src.algebra.rational import parse_rational
from src.algebra.sigma import SigmaMonomial, SigmaPoly
from src.config.settings import settings
from src.models.fixture import PublishedTable

TERM_PATTERN = re.compile(r"^\s*(\{[^}]*\})\s*=\s*(\S+)\s*$")


def parse_term(entry: str) -> Tuple[SigmaMonomial, Fraction]:
    """
    Parse one fixture entry such as "{1: 2, 3: 1} = -3/4".

    Raises:
        ValueError: If the entry is malformed
    """
    match = TERM_PATTERN.match(entry)
    if not match:
        raise ValueError(f"Malformed table entry: {entry!r}")
    powers = yaml.safe_load(match.group(1))
    if not isinstance(powers, dict) or not all(
        isinstance(d, int) and isinstance(e, int) for d, e in powers.items()
    ):
        raise ValueError(f"Malformed σ exponent map in entry: {entry!r}")
    try:
        mono = SigmaMonomial.from_mapping(powers)
        coeff = parse_rational(match.group(2))
    except ValueError as e:
        raise ValueError(f"Malformed table entry {entry!r}: {e}") from e
    return mono, coeff


class PublishedTableLoader:
    """
    Loads published γ_n polynomials from the YAML fixture.

    Tables are read once at construction and exposed both as raw
    PublishedTable records and as parsed SigmaPoly values keyed by n.
    """

    def __init__(self, tables_path: Optional[Union[str, Path]] = None):
        """
        Initialize the loader.

        Args:
            tables_path: Optional path to the fixture file.
                         Defaults to settings.published_tables_path
        """
        self.tables_path = Path(tables_path) if tables_path else settings.published_tables_path
        self.records: List[PublishedTable] = []
        self._load_tables()

    def _load_tables(self) -> None:
        """Load and validate records from the YAML file."""
        if not os.path.exists(self.tables_path):
            raise FileNotFoundError(
                f"Published tables file not found: {self.tables_path}"
            )

        with open(self.tables_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
            self.records = [PublishedTable(**record) for record in data.get("tables", [])]

    def polynomial(self, record: PublishedTable) -> SigmaPoly:
        """Parse a record into a SigmaPoly, rejecting duplicate or zero terms."""
        terms: Dict[SigmaMonomial, Fraction] = {}
        for entry in record.terms:
            mono, coeff = parse_term(entry)
            if mono in terms:
                raise ValueError(f"Duplicate monomial {mono} in table for n={record.n}")
            if not coeff:
                raise ValueError(f"Zero coefficient for {mono} in table for n={record.n}")
            terms[mono] = coeff
        return SigmaPoly(terms)

    def tables(self) -> Dict[int, SigmaPoly]:
        """All published polynomials keyed by n, in ascending n."""
        return {record.n: self.polynomial(record) for record in sorted(self.records, key=lambda r: r.n)}
