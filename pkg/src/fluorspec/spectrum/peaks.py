"""Peak positions and sideband line shapes of a computed spectrum."""

from typing import List, Literal

import numpy as np
from scipy.signal import find_peaks

from fluorspec.tolerances import DEFAULT_TOLERANCES, Tolerances

from .result import SpectrumResult

PeakShape = Literal["lorentzian", "dispersive", "irregular"]


def peak_indices(
    result: SpectrumResult, rel_prominence: float = 1e-3
) -> np.ndarray:
    peak = result.peak
    if peak <= 0:
        return np.array([], dtype=int)
    values = np.where(result.valid_mask, result.values, -np.inf)
    # find_peaks cannot see a maximum sitting on the grid edge
    padded = np.concatenate(([-np.inf], values, [-np.inf]))
    indices, _ = find_peaks(
        np.nan_to_num(padded, neginf=-peak), prominence=rel_prominence * peak
    )
    return indices - 1


def find_peak_positions(
    result: SpectrumResult, rel_prominence: float = 1e-3
) -> List[float]:
    """Detunings of the local maxima, ascending."""
    nu = result.nu
    return [float(nu[i]) for i in peak_indices(result, rel_prominence)]


def _half_max_distance(values: np.ndarray, index: int, step: int) -> int:
    half = 0.5 * values[index]
    i = index
    while 0 <= i + step < values.size and values[i] > half:
        i += step
    return abs(i - index)


def classify_peak(
    result: SpectrumResult, index: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> PeakShape:
    """Lorentzian-like, dispersive, or neither.

    Inside a window of twice the half-maximum distance on each side, a
    Lorentzian-like peak stays non-negative, falls monotonically to half
    maximum, and is convex at the window edges. A flank dipping below zero
    marks a dispersive structure.
    """
    values = np.nan_to_num(result.values)
    if values[index] <= 0:
        return "dispersive"
    left = 2 * _half_max_distance(values, index, -1)
    right = 2 * _half_max_distance(values, index, +1)
    lo = max(0, index - max(left, 2))
    hi = min(values.size - 1, index + max(right, 2))

    floor = -tol.positivity_rel * result.peak
    if values[lo : hi + 1].min() < floor:
        return "dispersive"

    rising = np.diff(values[max(0, index - left // 2) : index + 1])
    falling = np.diff(values[index : index + right // 2 + 1])
    if np.any(rising < 0) or np.any(falling > 0):
        return "irregular"

    def convex(i: int) -> bool:
        if i <= 0 or i >= values.size - 1:
            return True
        return values[i - 1] - 2 * values[i] + values[i + 1] > 0

    if not (convex(lo + 1) and convex(hi - 1)):
        return "irregular"
    return "lorentzian"
