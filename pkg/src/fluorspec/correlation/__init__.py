"""Two-time correlation initial conditions from the regression theorem."""

from .regression import (
    CorrelationIC,
    DetectionPair,
    Side,
    emission_pair,
    regression_initial,
)

__all__ = [
    "CorrelationIC",
    "DetectionPair",
    "Side",
    "emission_pair",
    "regression_initial",
]
