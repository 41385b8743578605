"""Sweep expansion, per-point evaluation and method comparison."""

import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np
from pydantic import ValidationError

from fluorspec.correlation import emission_pair, regression_initial
from fluorspec.errors import ConfigError
from fluorspec.models import build_system
from fluorspec.oracle import mollow_reference, oracle_spectrum
from fluorspec.schemas import (
    ComparisonReport,
    FrequencyGrid,
    MethodName,
    ModelConfig,
    ModelKind,
    RunConfig,
    ToleranceOverrides,
)
from fluorspec.solvers import steady_state
from fluorspec.spectrum import (
    SpectrumResult,
    find_peak_positions,
    limit_spectrum,
    variance_spectrum,
)

from .config import config_error_from_validation

logger = logging.getLogger(__name__)

BASE_LABEL = "base"


@dataclass(frozen=True)
class SweepPoint:
    label: str
    model: ModelConfig


def expand_sweep(config: RunConfig) -> List[SweepPoint]:
    """Sweep points in declaration order; ``base`` when nothing is swept."""
    if not config.sweep:
        return [SweepPoint(BASE_LABEL, config.model)]
    base = config.model.model_dump()
    points = []
    for spec in config.sweep:
        for index, value in enumerate(spec.values):
            try:
                model = ModelConfig.model_validate({**base, spec.parameter: value})
            except ValidationError as e:
                error = config_error_from_validation(e)
                raise ConfigError(
                    f"sweep {spec.parameter}[{index}] = {value}: {error}",
                    field=f"sweep.{spec.parameter}",
                ) from None
            points.append(SweepPoint(f"{spec.parameter}_{index:03d}", model))
    return points


def check_methods(points: List[SweepPoint], methods: List[MethodName]) -> None:
    """Reject method/model combinations before anything is computed."""
    if MethodName.MOLLOW not in methods:
        return
    for point in points:
        model = point.model
        if model.model is not ModelKind.TWO_LEVEL:
            raise ConfigError(
                f"{point.label}: the mollow reference needs model two_level",
                field="methods",
            )
        if model.detuning_1 != 0 or model.dephasing_rate != 0:
            raise ConfigError(
                f"{point.label}: the mollow reference needs detuning_1 = 0 "
                "and dephasing_rate = 0",
                field="methods",
            )
        if model.rabi_1 <= 0:
            raise ConfigError(
                f"{point.label}: the mollow reference needs rabi_1 > 0",
                field="methods",
            )


def compute_point(
    model: ModelConfig,
    grid: FrequencyGrid,
    methods: List[MethodName],
    workers: int = 1,
) -> Dict[MethodName, SpectrumResult]:
    """Every selected spectrum of one sweep point, keyed in method order."""
    system = build_system(model)
    ss = steady_state(system)
    diagnostics = ss.diagnostics()
    logger.debug("Steady state diagnostics: %s", diagnostics)
    ic = regression_initial(system, ss, emission_pair(model))

    spectra: Dict[MethodName, SpectrumResult] = {}
    for method in methods:
        if method is MethodName.LIMIT:
            result = limit_spectrum(system, ss, ic, grid, workers=workers)
        elif method is MethodName.VARIANCE:
            result = variance_spectrum(system, ss, ic, grid, workers=workers)
        elif method is MethodName.ORACLE:
            result = oracle_spectrum(system, ss, ic, grid, workers=workers)
        else:
            result = mollow_reference(
                model.rabi_1,
                model.gamma_1,
                grid,
                geometry_factor=model.geometry_factor,
            )
        spectra[method] = result
    return spectra


def reference_method(methods: List[MethodName]) -> MethodName:
    """variance if selected, else limit, else the first selected method."""
    for candidate in (MethodName.VARIANCE, MethodName.LIMIT):
        if candidate in methods:
            return candidate
    return methods[0]


def compare(
    reference_name: MethodName,
    reference: SpectrumResult,
    method: MethodName,
    result: SpectrumResult,
    tolerances: ToleranceOverrides,
) -> ComparisonReport:
    """Pointwise difference to the reference plus the positivity check."""
    mask = reference.valid_mask & result.valid_mask
    if mask.any():
        max_abs = float(np.max(np.abs(result.values[mask] - reference.values[mask])))
    else:
        max_abs = float("inf")
    scale = reference.peak
    if scale > 0:
        max_rel = max_abs / scale
    else:
        max_rel = 0.0 if max_abs == 0 else float("inf")

    equivalence_rel = tolerances.for_method(method)
    peak = result.peak
    min_value = result.minimum
    positive = min_value >= -tolerances.positivity_rel * max(peak, 0.0)
    return ComparisonReport(
        reference=reference_name,
        method=method,
        max_abs_diff=max_abs,
        max_rel_diff=max_rel,
        min_value=min_value,
        peak_value=peak,
        peak_positions=find_peak_positions(result),
        equivalence_rel=equivalence_rel,
        positivity_rel=tolerances.positivity_rel,
        passed=max_rel <= equivalence_rel and positive,
    )


def compare_all(
    spectra: Dict[MethodName, SpectrumResult], tolerances: ToleranceOverrides
) -> List[ComparisonReport]:
    methods = list(spectra)
    reference_name = reference_method(methods)
    reference = spectra[reference_name]
    return [
        compare(reference_name, reference, method, result, tolerances)
        for method, result in spectra.items()
    ]
