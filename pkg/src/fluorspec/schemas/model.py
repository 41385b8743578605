from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ModelKind(str, Enum):
    """Shipped emitter models."""

    TWO_LEVEL = "two_level"
    LAMBDA = "lambda"


class ModelConfig(BaseModel):
    """Physical parameters of one driven emitter.

    Rates and frequencies share one angular-frequency unit; spectra report
    frequencies in units of ``gamma_1``. For ``two_level`` the ``_2`` fields
    and ``ground_dephasing_rate`` are ignored.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: ModelKind
    rabi_1: float = Field(0.0, ge=0, allow_inf_nan=False)
    rabi_2: float = Field(0.0, ge=0, allow_inf_nan=False)
    detuning_1: float = Field(0.0, allow_inf_nan=False)
    detuning_2: float = Field(0.0, allow_inf_nan=False)
    gamma_1: float = Field(..., gt=0, allow_inf_nan=False)
    gamma_2: float = Field(0.0, ge=0, allow_inf_nan=False)
    geometry_factor: float = Field(1.0, gt=0, allow_inf_nan=False)
    dephasing_rate: float = Field(0.0, ge=0, allow_inf_nan=False)
    ground_dephasing_rate: float = Field(0.0, ge=0, allow_inf_nan=False)
    emission_line: Literal[1, 2] = 1

    @model_validator(mode="after")
    def _check_emission_line(self) -> "ModelConfig":
        if self.emission_line == 2:
            if self.model is ModelKind.TWO_LEVEL:
                raise ValueError("emission_line 2 exists only for the lambda model")
            if self.gamma_2 <= 0:
                raise ValueError("emission_line 2 requires gamma_2 > 0")
        return self

    @property
    def dimension(self) -> int:
        return 2 if self.model is ModelKind.TWO_LEVEL else 3

    @property
    def line_rate(self) -> float:
        """Spontaneous emission rate of the detected transition."""
        return self.gamma_2 if self.emission_line == 2 else self.gamma_1
