from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .grid import FrequencyGrid
from .model import ModelConfig


class MethodName(str, Enum):
    """Spectrum evaluation paths selectable from a run configuration."""

    LIMIT = "limit"
    VARIANCE = "variance"
    ORACLE = "oracle"
    MOLLOW = "mollow"


SWEEPABLE_FIELDS = frozenset(
    name for name in ModelConfig.model_fields if name not in ("model", "emission_line")
)


class SweepSpec(BaseModel):
    """A 1-D sweep: one ModelConfig field stepped through ``values``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    parameter: str
    values: List[float] = Field(..., min_length=1)

    @field_validator("parameter")
    @classmethod
    def _known_parameter(cls, value: str) -> str:
        if value not in SWEEPABLE_FIELDS:
            raise ValueError(
                f"unknown sweep parameter '{value}'; "
                f"expected one of {sorted(SWEEPABLE_FIELDS)}"
            )
        return value


class ToleranceOverrides(BaseModel):
    """Acceptance tolerances, all relative to the spectrum peak."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    equivalence_rel: float = Field(1e-10, gt=0)
    positivity_rel: float = Field(1e-10, gt=0)
    oracle_rel: float = Field(1e-3, gt=0)
    mollow_rel: float = Field(1e-8, gt=0)

    def for_method(self, method: MethodName) -> float:
        if method is MethodName.ORACLE:
            return self.oracle_rel
        if method is MethodName.MOLLOW:
            return self.mollow_rel
        return self.equivalence_rel


class RunConfig(BaseModel):
    """Everything one ``fluorspec run`` invocation needs."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: ModelConfig
    grid: FrequencyGrid
    methods: List[MethodName] = Field(..., min_length=1)
    output_path: str = "fluorspec-output"
    sweep: Optional[List[SweepSpec]] = None
    tolerances: ToleranceOverrides = ToleranceOverrides()
    # not serialized: reports must not depend on the thread count
    workers: int = Field(1, ge=1, exclude=True)

    @field_validator("methods")
    @classmethod
    def _unique_methods(cls, value: List[MethodName]) -> List[MethodName]:
        seen = []
        for method in value:
            if method not in seen:
                seen.append(method)
        return seen

    @field_validator("sweep")
    @classmethod
    def _distinct_sweeps(
        cls, value: Optional[List[SweepSpec]]
    ) -> Optional[List[SweepSpec]]:
        if value:
            names = [spec.parameter for spec in value]
            if len(set(names)) != len(names):
                raise ValueError("each parameter may be swept only once")
        return value
