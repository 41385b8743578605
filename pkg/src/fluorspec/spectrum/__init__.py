"""Incoherent spectra by the limit and variance methods."""

from .methods import (
    coherent_weight,
    evaluate_grid,
    integrated_intensity,
    limit_spectrum,
    variance_spectrum,
)
from .peaks import classify_peak, find_peak_positions, peak_indices
from .result import SpectrumMethod, SpectrumResult

__all__ = [
    "SpectrumMethod",
    "SpectrumResult",
    "classify_peak",
    "coherent_weight",
    "evaluate_grid",
    "find_peak_positions",
    "integrated_intensity",
    "limit_spectrum",
    "peak_indices",
    "variance_spectrum",
]
