"""Pydantic schemas for configurations and reports."""

from .grid import FrequencyGrid
from .model import ModelConfig, ModelKind
from .report import ComparisonReport, PointReport, RunReport
from .run import (
    SWEEPABLE_FIELDS,
    MethodName,
    RunConfig,
    SweepSpec,
    ToleranceOverrides,
)

__all__ = [
    "ComparisonReport",
    "FrequencyGrid",
    "MethodName",
    "ModelConfig",
    "ModelKind",
    "PointReport",
    "RunConfig",
    "RunReport",
    "SWEEPABLE_FIELDS",
    "SweepSpec",
    "ToleranceOverrides",
]
