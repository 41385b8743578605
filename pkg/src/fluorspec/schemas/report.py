from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .model import ModelConfig
from .run import MethodName, RunConfig


class ComparisonReport(BaseModel):
    """One method checked against the reference spectrum of a sweep point."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    reference: MethodName
    method: MethodName
    max_abs_diff: float
    max_rel_diff: float
    min_value: float
    peak_value: float
    peak_positions: List[float]
    equivalence_rel: float
    positivity_rel: float
    passed: bool = Field(..., serialization_alias="pass")


class PointReport(BaseModel):
    """Results for one sweep point."""

    model_config = ConfigDict(frozen=True)

    label: str
    model: ModelConfig
    coherent_weight: Dict[str, float]
    comparisons: List[ComparisonReport]
    files: List[str]
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.comparisons)


class RunReport(BaseModel):
    """The report file written next to the CSV spectra."""

    model_config = ConfigDict(frozen=True)

    version: str
    gamma_1: float
    config: RunConfig
    points: List[PointReport]
    passed: bool = Field(..., serialization_alias="pass")
