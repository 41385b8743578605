"""Incoherent spectrum by the variance and limit methods.

S(nu) = gamma * u * Re Y_obs(s = i nu gamma_1), where Y(s) is the Laplace
transform of the relevant correlator vector. The two methods share only
(Q, R, X(inf)):

- variance: Delta Y(s) = (sI - Q)^-1 Delta Y(0).
- limit: Y(s) = (sI - Q)^-1 Y(0) + (sI - Q)^-1 s^-1 <B> R, rewritten with
  (sI - Q)^-1 s^-1 = Q^-1 [(sI - Q)^-1 - s^-1]. The s^-1 pole carries
  <B> X(inf), whose observed component |<sigma_eg>|^2 is real, so it adds
  nothing off the pole and is reported only as the coherent weight.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Literal, Optional, Sequence, TypeVar

import numpy as np
from scipy.integrate import trapezoid

from fluorspec.algebra import BasisMap
from fluorspec.correlation import CorrelationIC, DetectionPair
from fluorspec.errors import FluorspecError, ResonantFrequencyError
from fluorspec.models.liouvillian import LiouvilleSystem
from fluorspec.schemas import FrequencyGrid, ModelConfig
from fluorspec.solvers.dynamics import (
    EigenResolvent,
    SteadyState,
    factorize_q,
    resolvent_solve,
)
from fluorspec.tolerances import DEFAULT_TOLERANCES, Tolerances

from .result import SpectrumMethod, SpectrumResult

logger = logging.getLogger(__name__)

ResolventPath = Literal["factorized", "eigen"]

T = TypeVar("T")
V = TypeVar("V")


def coherent_weight(
    ss: SteadyState, pair: DetectionPair, config: ModelConfig
) -> float:
    """gamma * u * |<observed>|^2, the weight of delta(omega - omega_1)."""
    basis = BasisMap(config.dimension)
    observed = basis.expectation_as_vector_form(pair.observed).evaluate(ss.x_inf)
    return config.line_rate * config.geometry_factor * abs(observed) ** 2


def evaluate_grid(
    fn: Callable[[T], V], items: Sequence[T], workers: int = 1
) -> List[V]:
    """Apply ``fn`` to every grid item; output order is input order."""
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _resolvent(
    system: LiouvilleSystem, path: ResolventPath, tol: Tolerances
) -> Callable[[complex, np.ndarray], np.ndarray]:
    if path == "eigen":
        return EigenResolvent(system, tol).solve
    if path == "factorized":
        return lambda s, v: resolvent_solve(system, s, v, tol)
    raise ValueError(f"unknown resolvent path '{path}'")


def _assemble(
    system: LiouvilleSystem,
    ss: SteadyState,
    ic: CorrelationIC,
    grid: FrequencyGrid,
    method: SpectrumMethod,
    samples: List[Optional[float]],
) -> SpectrumResult:
    invalid = [i for i, value in enumerate(samples) if value is None]
    if len(invalid) == grid.count:
        raise FluorspecError(
            f"{method.value} spectrum: every grid point is resonant"
        )
    if invalid:
        logger.warning(
            "%s spectrum: %d grid point(s) hit an eigenvalue of Q, skipped",
            method.value,
            len(invalid),
        )
    values = np.array([np.nan if v is None else v for v in samples], dtype=float)
    return SpectrumResult(
        grid=grid,
        values=values,
        coherent_weight=coherent_weight(ss, ic.pair, system.config),
        method=method,
        invalid_points=invalid,
        frequency_unit=system.config.gamma_1,
    )


def variance_spectrum(
    system: LiouvilleSystem,
    ss: SteadyState,
    ic: CorrelationIC,
    grid: FrequencyGrid,
    *,
    resolvent: ResolventPath = "factorized",
    workers: int = 1,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SpectrumResult:
    """Spectrum from the fluctuation correlator Delta Y.

    Args:
        system: The emitter's (Q, R) pair
        ss: Steady state of ``system``
        ic: Correlator initial data from ``regression_initial``
        grid: Detunings in units of gamma_1
        resolvent: "factorized" solves afresh at each point, "eigen" reuses
            one eigendecomposition of Q
        workers: Threads used over the grid; values do not depend on it
        tol: Numerical tolerances

    Returns:
        SpectrumResult with NaN at points where sI - Q is singular

    Raises:
        FluorspecError: If every grid point is singular
        ValueError: If ``resolvent`` names an unknown path
    """
    config = system.config
    prefactor = config.line_rate * config.geometry_factor
    solve = _resolvent(system, resolvent, tol)
    slot = ic.observed_slot

    def point(nu: float) -> Optional[float]:
        try:
            y = solve(1j * nu * config.gamma_1, ic.dy0)
        except ResonantFrequencyError:
            return None
        return prefactor * y[slot].real

    logger.debug("Variance spectrum on %d points", grid.count)
    samples = evaluate_grid(point, grid.points(), workers)
    return _assemble(system, ss, ic, grid, SpectrumMethod.VARIANCE, samples)


def limit_spectrum(
    system: LiouvilleSystem,
    ss: SteadyState,
    ic: CorrelationIC,
    grid: FrequencyGrid,
    *,
    resolvent: ResolventPath = "factorized",
    workers: int = 1,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SpectrumResult:
    """Finite part of the total spectrum, built from Y(0) and not Delta Y(0).

    At nu = 0 the same finite-part expression is evaluated: the principal
    value of the real-coefficient pole term is zero. Arguments and failure
    modes are those of ``variance_spectrum``; a singular Q additionally
    raises SingularLiouvillianError.
    """
    config = system.config
    prefactor = config.line_rate * config.geometry_factor
    solve = _resolvent(system, resolvent, tol)
    minus_q_inverse = factorize_q(system, tol)
    source = ic.inhomogeneous_scale * system.r
    slot = ic.observed_slot

    def point(nu: float) -> Optional[float]:
        s = 1j * nu * config.gamma_1
        try:
            direct = solve(s, ic.y0)
            driven = solve(s, source)
        except ResonantFrequencyError:
            return None
        finite = direct - minus_q_inverse.solve(driven)
        return prefactor * finite[slot].real

    logger.debug("Limit spectrum on %d points", grid.count)
    samples = evaluate_grid(point, grid.points(), workers)
    return _assemble(system, ss, ic, grid, SpectrumMethod.LIMIT, samples)


def integrated_intensity(
    result: SpectrumResult, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Trapezoid integral of the spectrum over omega.

    For a wide enough grid this approaches pi * gamma * u * (<sigma_ee> -
    |<sigma_eg>|^2).
    """
    mask = result.valid_mask
    nu = result.nu[mask]
    values = result.values[mask]
    if values.size < 2:
        return 0.0
    peak = float(np.max(np.abs(values)))
    edge = max(abs(values[0]), abs(values[-1]))
    if peak > 0 and edge > tol.boundary_decay * peak:
        logger.warning(
            "Spectrum has not decayed at the grid edges (%.2e of peak); "
            "the integral is truncated",
            edge / peak,
        )
    return float(trapezoid(values, nu) * result.frequency_unit)
