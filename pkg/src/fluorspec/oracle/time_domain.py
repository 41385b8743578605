"""Brute-force time-domain path: RK4 propagation plus a direct Fourier sum."""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from fluorspec.correlation import CorrelationIC
from fluorspec.errors import TruncationError
from fluorspec.models.liouvillian import LiouvilleSystem
from fluorspec.schemas import FrequencyGrid
from fluorspec.solvers.dynamics import SteadyState, eigen_report
from fluorspec.spectrum.methods import coherent_weight as line_coherent_weight
from fluorspec.spectrum.methods import evaluate_grid
from fluorspec.spectrum.result import SpectrumMethod, SpectrumResult
from fluorspec.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

FOURIER_CHUNK = 8
GRID_PHASE_STEP = 0.1
TAIL_MARGIN = 1e3


@dataclass(frozen=True, eq=False)
class CorrelationSeries:
    """C(tau_j) sampled at tau_j = j * dt."""

    dt: float
    samples: np.ndarray

    @property
    def tau(self) -> np.ndarray:
        return self.dt * np.arange(self.samples.size)

    @property
    def t_max(self) -> float:
        return self.dt * (self.samples.size - 1)


def rk4_matrices(q: np.ndarray, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    """One classical RK4 step of dx/dt = Q x + R as x -> M x + N R.

    For a linear autonomous system the four stages collapse to the Taylor
    polynomial of exp(Q dt) through fourth order.
    """
    n = q.shape[0]
    h = dt * q
    h2 = h @ h
    h3 = h2 @ h
    identity = np.eye(n, dtype=complex)
    m = identity + h + h2 / 2 + h3 / 6 + h3 @ h / 24
    nr = dt * (identity + h / 2 + h2 / 6 + h3 / 24)
    return m, nr


def rk4_propagate(
    q: np.ndarray,
    x0: np.ndarray,
    dt: float,
    steps: int,
    r: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Trajectory x(j dt), j = 0..steps, as a (steps + 1, n) array."""
    m, nr = rk4_matrices(q, dt)
    drive = nr @ r if r is not None else np.zeros(q.shape[0], dtype=complex)
    trajectory = np.empty((steps + 1, q.shape[0]), dtype=complex)
    trajectory[0] = x0
    for j in range(steps):
        trajectory[j + 1] = m @ trajectory[j] + drive
    return trajectory


def relax(system: LiouvilleSystem, t_max: float, dt: float) -> np.ndarray:
    """X(t_max) from the ground state by RK4 on dX/dt = Q X + R."""
    steps = int(math.ceil(t_max / dt))
    x0 = np.zeros(system.n, dtype=complex)
    return rk4_propagate(system.q, x0, dt, steps, r=system.r)[-1]


def suggest_time_grid(
    system: LiouvilleSystem,
    grid: Optional[FrequencyGrid] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[float, float]:
    """(t_max, dt) satisfying the step-size rule and the tail bound."""
    report = eigen_report(system, tol)
    fastest = report.fastest_rate
    dt = tol.step_rule / fastest
    if grid is not None:
        # keep nu * dt small so the trapezoid sum resolves e^{-i nu tau}
        edge = max(abs(grid.nu_min), abs(grid.nu_max))
        nu_max = system.config.gamma_1 * edge
        dt = min(dt, GRID_PHASE_STEP / nu_max)
    decay = report.slowest_decay or system.config.line_rate
    t_max = math.log(TAIL_MARGIN / tol.correlation_tail) / decay
    return t_max, dt


def integrate_correlation(
    system: LiouvilleSystem,
    ic: CorrelationIC,
    t_max: float,
    dt: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> CorrelationSeries:
    """Propagate Delta Y under dY/dtau = Q Y and sample the observed slot.

    Args:
        system: The emitter's (Q, R) pair
        ic: Correlator initial data
        t_max: Integration window, at least 20 slowest decay times
        dt: RK4 step, at most ``step_rule`` / max |lambda|
        tol: Numerical tolerances

    Returns:
        CorrelationSeries of C(tau) on tau = 0, dt, ..., ceil(t_max/dt) dt

    Raises:
        ValueError: If dt or t_max breaks the rules above
        TruncationError: If |C(t_max)| has not decayed below the tail bound
    """
    report = eigen_report(system, tol)
    if dt > tol.step_rule / report.fastest_rate:
        raise ValueError(
            f"dt = {dt} breaks the step rule dt <= "
            f"{tol.step_rule}/{report.fastest_rate:.6g}"
        )
    if report.slowest_decay is not None and t_max < 20.0 / report.slowest_decay:
        raise ValueError(
            f"t_max = {t_max} is below 20/{report.slowest_decay:.6g}, "
            "the slowest decay time"
        )
    steps = int(math.ceil(t_max / dt))
    logger.debug("RK4 correlation: %d steps of %.3e", steps, dt)
    trajectory = rk4_propagate(system.q, ic.dy0, dt, steps)
    samples = trajectory[:, ic.observed_slot]

    reference = abs(samples[0]) or float(np.max(np.abs(samples)))
    if abs(samples[-1]) > tol.correlation_tail * reference:
        raise TruncationError(
            f"truncation inadequate: |C(t_max)| = {abs(samples[-1]):.3e} at "
            f"t_max = {t_max}; increase t_max"
        )
    return CorrelationSeries(dt=dt, samples=samples)


def fourier_spectrum(
    series: CorrelationSeries,
    grid: FrequencyGrid,
    gamma_1: float,
    u: float,
    *,
    frequency_unit: float = 1.0,
    coherent_weight: float = 0.0,
    workers: int = 1,
) -> SpectrumResult:
    """Half-line trapezoid transform gamma u Re sum e^{-i nu tau} C(tau) dt."""
    tau = series.tau
    weights = np.full(tau.size, series.dt)
    weights[0] = weights[-1] = series.dt / 2
    weighted = weights * series.samples
    nus = grid.points() * frequency_unit
    chunks = [
        nus[i : i + FOURIER_CHUNK] for i in range(0, nus.size, FOURIER_CHUNK)
    ]

    def transform(chunk: np.ndarray) -> np.ndarray:
        return (np.exp(-1j * np.outer(chunk, tau)) @ weighted).real

    parts = evaluate_grid(transform, chunks, workers)
    return SpectrumResult(
        grid=grid,
        values=gamma_1 * u * np.concatenate(parts),
        coherent_weight=coherent_weight,
        method=SpectrumMethod.ORACLE_TIME_DOMAIN,
        frequency_unit=frequency_unit,
    )


def oracle_spectrum(
    system: LiouvilleSystem,
    ss: SteadyState,
    ic: CorrelationIC,
    grid: FrequencyGrid,
    *,
    workers: int = 1,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SpectrumResult:
    """integrate_correlation then fourier_spectrum on a suggested time grid."""
    config = system.config
    t_max, dt = suggest_time_grid(system, grid, tol)
    series = integrate_correlation(system, ic, t_max, dt, tol)
    return fourier_spectrum(
        series,
        grid,
        config.line_rate,
        config.geometry_factor,
        frequency_unit=config.gamma_1,
        coherent_weight=line_coherent_weight(ss, ic.pair, config),
        workers=workers,
    )
