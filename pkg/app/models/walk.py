"""
Data models for random walks and exact small-instance analysis
"""
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config.settings import settings

# k-subset of the ground set, always stored sorted
Subset = Tuple[int, ...]

NORMALIZATION_TOLERANCE = 1e-12


class WalkKind(str, Enum):
    """Which down-up walk the spanning-tree sampler runs"""
    COGRAPHIC = "cographic"  # on complements of spanning trees (fast path)
    GRAPHIC = "graphic"  # directly on spanning trees (O(|E|) per step)


class WalkConfig(BaseModel):
    """Configuration of a sampling run"""
    epsilon: float = Field(default_factory=lambda: settings.DEFAULT_EPSILON, gt=0.0, lt=1.0)
    schedule_constant: float = Field(
        default_factory=lambda: settings.SCHEDULE_CONSTANT,
        gt=0.0,
        description="Constant C in C * k * (ln max(k, 2) + ln(1/epsilon))",
    )
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=2**64)
    steps: Optional[int] = Field(
        default=None,
        ge=0,
        description="Explicit step count overriding the mixing schedule",
    )
    walk: WalkKind = WalkKind.COGRAPHIC

    model_config = ConfigDict(frozen=True, use_enum_values=True)


class WalkRun(BaseModel):
    """Outcome of one chain"""
    final_set: Subset
    steps: int = Field(ge=0)
    tau: Optional[int] = Field(
        default=None,
        description="First step after which every initial element was replaced (None: not yet)",
    )

    @model_validator(mode="after")
    def _tau_within_run(self):
        if self.tau is not None and self.tau > self.steps:
            raise ValueError(f"tau {self.tau} exceeds steps {self.steps}")
        return self


class DistributionTable(BaseModel):
    """Probability vector over an enumerated support"""
    support: List[Subset]
    probabilities: List[float]

    @model_validator(mode="after")
    def _normalized(self):
        if len(self.support) != len(self.probabilities):
            raise ValueError("support and probabilities differ in length")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be non-negative")
        total = sum(self.probabilities)
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE * max(1, len(self.probabilities)):
            raise ValueError(f"probabilities sum to {total}, not 1")
        return self

    @classmethod
    def from_weights(cls, support: List[Subset], weights) -> "DistributionTable":
        """Normalize non-negative weights into a table"""
        weights = np.asarray(weights, dtype=float)
        return cls(support=list(support), probabilities=(weights / weights.sum()).tolist())

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probabilities, dtype=float)

    def same_support(self, other: "DistributionTable") -> bool:
        return self.support == other.support
