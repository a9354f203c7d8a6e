import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


class RadialEvalReport(BaseModel):
    """Partial-sum value of a functional at radius r plus a certified tail bound."""
    model_config = ConfigDict(frozen=True)

    r: float
    value: float
    tail: float = 0.0
    order_used: int = 0

    @property
    def certified(self) -> bool:
        return math.isfinite(self.tail)

    @property
    def upper(self) -> float:
        return self.value + self.tail

    @field_serializer("tail")
    def _serialize_tail(self, tail: float) -> Optional[float]:
        return _finite_or_none(tail)


class RadiusResult(BaseModel):
    """A bracketed root of one of the radius equations."""
    model_config = ConfigDict(frozen=True)

    name: str
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int

    @property
    def width(self) -> float:
        return self.bracket_hi - self.bracket_lo


class VerificationRecord(BaseModel):
    """One inequality check lhs <= rhs at radius r."""
    model_config = ConfigDict(frozen=True)

    label: str = ""
    lhs: RadialEvalReport
    rhs: RadialEvalReport
    r: float
    passed: bool
    margin: float
    exploratory: bool = False


class WitnessReport(BaseModel):
    """Where a sharpness expression first fails, against where it should."""
    model_config = ConfigDict(frozen=True)

    family: Dict[str, Any]
    parameter: Optional[float] = None
    p: Optional[float] = None
    threshold_found: float
    threshold_predicted: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int = 0

    @property
    def difference(self) -> float:
        return abs(self.threshold_found - self.threshold_predicted)


class TrialOutcome(BaseModel):
    """Worst record of one verification trial."""
    model_config = ConfigDict(frozen=True)

    trial: int
    seed: int
    checks: int
    passed: bool
    worst_margin: float
    worst_label: str


class SuiteReport(BaseModel):
    """Aggregate of a verification suite."""
    model_config = ConfigDict(frozen=True)

    suite: str
    seed: int
    trials: int
    order: int
    passed: bool
    checks: int
    violations: int
    worst_margin: float
    per_trial: List[TrialOutcome] = Field(default_factory=list)
    violation_labels: List[str] = Field(default_factory=list)


class JsonReport(BaseModel):
    """Top-level document the CLI writes to stdout."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = "1"
    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    passed: Optional[bool] = Field(default=None, alias="pass")


@dataclass
class SuiteState:
    """State carried through the verification workflow graph."""

    # Suite configuration
    suite: str
    seed: int = 42
    trials: int = 200
    order: int = 128
    max_depth: int = 3
    boundary_offset: float = 1e-9
    comparison_tol: float = 1e-12
    cauchy_radius: float = 0.98

    # Generated population, one entry per trial
    population: List[Any] = field(default_factory=list)

    # Check results
    records: List[List[VerificationRecord]] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    has_violations: bool = False

    # Final aggregate
    report: Optional[SuiteReport] = None
