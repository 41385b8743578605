"""Independent verification paths for the spectrum methods."""

from .bloch import BlochSteadyState, bloch_steady_state
from .mollow import mollow_poles, mollow_reference
from .time_domain import (
    CorrelationSeries,
    fourier_spectrum,
    integrate_correlation,
    oracle_spectrum,
    relax,
    rk4_propagate,
    suggest_time_grid,
)

__all__ = [
    "BlochSteadyState",
    "CorrelationSeries",
    "bloch_steady_state",
    "fourier_spectrum",
    "integrate_correlation",
    "mollow_poles",
    "mollow_reference",
    "oracle_spectrum",
    "relax",
    "rk4_propagate",
    "suggest_time_grid",
]
