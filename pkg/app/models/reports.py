"""
Report models emitted by the analysis services and the CLI

All reports serialize to JSON with `to_json()`; infinite values are written
as the string "inf" and boolean verdicts under the key "pass".
"""
import math
from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer


def _finite_or_inf(value: Optional[float]) -> Any:
    if value is not None and math.isinf(value):
        return "inf"
    return value


class Report(BaseModel):
    """Base class: JSON by alias, verdict fields constructed by name"""

    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)

    def to_human(self) -> str:
        data = self.model_dump(mode="json", by_alias=True)
        width = max((len(key) for key in data), default=0)
        return "\n".join(f"{key:<{width}}  {value}" for key, value in data.items())


# ============================================================
# Exchange
# ============================================================

class ExchangeWitness(BaseModel):
    """Triple (S, T, i) attaining alpha_min together with its best j"""
    S: List[int]
    T: List[int]
    i: int
    j: Optional[int] = None
    ratio: float

    @field_serializer("ratio")
    def _serialize_ratio(self, value: float):
        return _finite_or_inf(value)


class ExchangeViolation(BaseModel):
    """Triple (S, T, i) with no exchange partner j of positive mass"""
    S: List[int]
    T: List[int]
    i: int


class ExchangeReport(Report):
    """Exact approximate-exchange constant of an enumerable density"""
    alpha_min: float
    k: int
    k_squared: int
    witness: Optional[ExchangeWitness] = None
    pair_count: int = Field(ge=0)
    violations: List[ExchangeViolation] = Field(default_factory=list)

    @field_serializer("alpha_min")
    def _serialize_alpha(self, value: float):
        return _finite_or_inf(value)

    @property
    def finite(self) -> bool:
        return not math.isinf(self.alpha_min)


class QuadraticCheckResult(Report):
    """sqrt(A) <= sqrt(B) + sqrt(C) for disjoint 2-subsets S, T"""
    passed: bool = Field(alias="pass")
    A: float
    B: float
    C: float


class DppBoundResult(Report):
    """alpha_min <= k^2 for a DPP"""
    passed: bool = Field(alias="pass")
    alpha_min: float
    k_squared: int

    @field_serializer("alpha_min")
    def _serialize_alpha(self, value: float):
        return _finite_or_inf(value)


class HessianReport(Report):
    """At most one positive Hessian eigenvalue at every checked point"""
    max_positive_eigs: int
    passed: bool = Field(alias="pass")
    points: int = 0


# ============================================================
# Walks and sampling
# ============================================================

class WalkExactReport(Report):
    """Exact small-instance checks of the down-up kernel"""
    stationarity_err: float
    kl_contraction_pass: bool
    pinsker_pass: bool
    reversibility_err: float
    spectral_gap: float
    k: int
    support_size: int


class VerifyReport(Report):
    """Empirical TV of the sampler against the enumerated distribution"""
    exact_support: int
    empirical_tv: float
    epsilon: float
    passed: bool = Field(alias="pass")


class BenchRow(Report):
    """One benchmark measurement"""
    n_edges: int
    steps: int
    wall_seconds: float
    seconds_per_step: float


class OutputFormat(str, Enum):
    """How sampled trees are printed"""
    IDS = "ids"
    ENDPOINTS = "endpoints"


class CommandOutcome(BaseModel):
    """Exit code plus the text written to standard output"""
    exit_code: int = Field(ge=0, le=2)
    payload: str = ""


class AnalysisKind(str, Enum):
    """Subcommands of `analyze`"""
    EXCHANGE = "exchange"
    WALK_EXACT = "walk-exact"
    HESSIAN = "hessian"
