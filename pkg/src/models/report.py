"""
Verification report models.

A report is an ordered list of named checks; it passes iff every check
passes. Checks carry a category so summaries can count e.g. the table
checks separately from the oracle checks.
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckCategory(str, Enum):
    """Kinds of verification checks."""
    TABLE = "tables"
    ANCHOR = "anchors"
    WORKED = "worked"
    ORACLE = "oracle"
    BINOMIAL = "binomial"
    RECURSION = "recursion"


class CheckResult(BaseModel):
    """
    Outcome of one check.

    `detail` is set on failure and names the first mismatch found.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Human-readable check name")
    category: CheckCategory = Field(..., description="Check family")
    expected: str = Field(..., description="What the check expects")
    passed: bool = Field(..., description="Whether the check passed")
    detail: Optional[str] = Field(None, description="Mismatch description on failure")
    points: int = Field(0, ge=0, description="Evaluation points covered by the check")


class VerificationReport(BaseModel):
    """Ordered collection of check results."""
    model_config = ConfigDict(frozen=True)

    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def points_checked(self) -> int:
        return sum(check.points for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def by_category(self, category: CheckCategory) -> List[CheckResult]:
        return [check for check in self.checks if check.category == category]

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def merge(self, *others: "VerificationReport") -> "VerificationReport":
        checks = list(self.checks)
        for other in others:
            checks.extend(other.checks)
        return VerificationReport(checks=checks)

    def summary(self) -> Dict[CheckCategory, Dict[str, int]]:
        """Per-category counts of passed checks, total checks and points."""
        counts: Dict[CheckCategory, Dict[str, int]] = {}
        for check in self.checks:
            entry = counts.setdefault(check.category, {"passed": 0, "total": 0, "points": 0})
            entry["total"] += 1
            entry["points"] += check.points
            if check.passed:
                entry["passed"] += 1
        return counts
