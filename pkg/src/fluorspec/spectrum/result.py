from dataclasses import dataclass, field
from enum import Enum
from typing import List

import numpy as np

from fluorspec.schemas import FrequencyGrid


class SpectrumMethod(str, Enum):
    LIMIT = "limit"
    VARIANCE = "variance"
    ORACLE_TIME_DOMAIN = "oracle"
    MOLLOW_ANALYTIC = "mollow"


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Incoherent spectral density on a grid.

    ``coherent_weight`` is the coefficient of delta(omega - omega_1) and is
    never added into ``values``. ``frequency_unit`` converts grid detunings
    to the angular-frequency unit of the model rates (it is gamma_1).
    Invalid grid points hold NaN.
    """

    grid: FrequencyGrid
    values: np.ndarray
    coherent_weight: float
    method: SpectrumMethod
    invalid_points: List[int] = field(default_factory=list)
    frequency_unit: float = 1.0

    @property
    def nu(self) -> np.ndarray:
        return self.grid.points()

    @property
    def valid_mask(self) -> np.ndarray:
        mask = np.ones(self.grid.count, dtype=bool)
        mask[self.invalid_points] = False
        return mask

    @property
    def peak(self) -> float:
        valid = self.values[self.valid_mask]
        return float(valid.max()) if valid.size else 0.0

    @property
    def minimum(self) -> float:
        valid = self.values[self.valid_mask]
        return float(valid.min()) if valid.size else 0.0
