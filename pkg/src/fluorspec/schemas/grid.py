import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class FrequencyGrid(BaseModel):
    """Uniform grid of detunings nu = omega - omega_1, in units of gamma_1."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    nu_min: float = Field(..., allow_inf_nan=False)
    nu_max: float = Field(..., allow_inf_nan=False)
    count: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _check_order(self) -> "FrequencyGrid":
        if not self.nu_min < self.nu_max:
            raise ValueError(
                f"nu_min ({self.nu_min}) must be below nu_max ({self.nu_max})"
            )
        return self

    @property
    def spacing(self) -> float:
        return (self.nu_max - self.nu_min) / (self.count - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.nu_min, self.nu_max, self.count)

    @classmethod
    def symmetric(cls, half_width: float, count: int) -> "FrequencyGrid":
        return cls(nu_min=-half_width, nu_max=half_width, count=count)
