import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings

from fluorspec.errors import FluorspecError, ResonantFrequencyError
from fluorspec.schemas import FrequencyGrid
from fluorspec.solvers import eigen_report
from fluorspec.spectrum import (
    SpectrumMethod,
    SpectrumResult,
    classify_peak,
    coherent_weight,
    find_peak_positions,
    integrated_intensity,
    limit_spectrum,
    methods,
    peak_indices,
    variance_spectrum,
)
from fluorspec.tolerances import DEFAULT_TOLERANCES

from helpers import any_configs, covering_grid, lambda_model, prepare, two_level

SMALL_GRID = FrequencyGrid.symmetric(12.0, 241)


def _both(config, grid=SMALL_GRID, **options):
    system, ss, ic = prepare(config)
    return (
        limit_spectrum(system, ss, ic, grid, **options),
        variance_spectrum(system, ss, ic, grid, **options),
    )


def _synthetic(values, grid):
    return SpectrumResult(
        grid=grid,
        values=np.asarray(values, dtype=float),
        coherent_weight=0.0,
        method=SpectrumMethod.VARIANCE,
    )


class TestMethodEquivalence:
    @given(any_configs)
    def test_limit_equals_variance(self, config):
        limit, variance = _both(config, covering_grid(config, 201))
        peak = variance.peak
        diff = np.max(np.abs(limit.values - variance.values))
        assert diff <= DEFAULT_TOLERANCES.equivalence_rel * peak

    @given(any_configs)
    def test_positive(self, config):
        for result in _both(config, covering_grid(config, 201)):
            assert result.minimum >= -DEFAULT_TOLERANCES.positivity_rel * result.peak

    def test_mollow_pair(self, mollow_spectra):
        limit, variance = mollow_spectra
        diff = np.max(np.abs(limit.values - variance.values))
        assert diff <= 1e-10 * variance.peak
        assert limit.coherent_weight == variance.coherent_weight

    def test_eigen_resolvent_path(self, lambda_pipeline):
        system, ss, ic = lambda_pipeline
        factorized = variance_spectrum(system, ss, ic, SMALL_GRID)
        eigen = variance_spectrum(system, ss, ic, SMALL_GRID, resolvent="eigen")
        np.testing.assert_allclose(
            eigen.values, factorized.values, atol=1e-9 * factorized.peak
        )

    def test_unknown_resolvent_path(self, lambda_pipeline):
        with pytest.raises(ValueError, match="resolvent"):
            variance_spectrum(*lambda_pipeline, SMALL_GRID, resolvent="qr")

    def test_worker_count_does_not_change_values(self, lambda_pipeline):
        serial = variance_spectrum(*lambda_pipeline, SMALL_GRID)
        threaded = variance_spectrum(*lambda_pipeline, SMALL_GRID, workers=4)
        np.testing.assert_array_equal(serial.values, threaded.values)


class TestMollow:
    def test_three_peaks(self, mollow_pipeline, mollow_spectra, mollow_grid):
        _, variance = mollow_spectra
        spacing = mollow_grid.spacing
        eigenvalues = eigen_report(mollow_pipeline.system).eigenvalues
        centers = sorted(eigenvalues.imag / mollow_pipeline.system.config.gamma_1)
        for center, expected in zip(centers, (-10.0, 0.0, 10.0)):
            assert abs(center - expected) <= spacing

        # the broad central line tilts each sideband, pulling its maximum
        # two grid points inward of the pole
        positions = find_peak_positions(variance)
        assert len(positions) == 3
        assert abs(positions[1]) <= spacing
        for found, center in zip(positions, centers):
            assert abs(found - center) <= 2 * spacing

    def test_central_to_sideband_ratio(self, mollow_spectra):
        _, variance = mollow_spectra
        nu = variance.nu
        central = variance.values[np.argmin(np.abs(nu))]
        sideband = variance.values[nu > 5.0].max()
        assert central / sideband == pytest.approx(3.0, rel=0.05)

    def test_sidebands_are_lorentzian(self, mollow_spectra):
        _, variance = mollow_spectra
        for index in peak_indices(variance):
            assert classify_peak(variance, index) == "lorentzian"

    def test_symmetric_on_resonance(self, mollow_spectra):
        _, variance = mollow_spectra
        np.testing.assert_allclose(
            variance.values, variance.values[::-1], atol=1e-12 * variance.peak
        )


class TestProperties:
    def test_zero_drive(self):
        for result in _both(two_level(rabi=0.0, detuning=1.0)):
            assert np.all(result.values == 0)
            assert result.coherent_weight == 0

    def test_geometry_factor_scales_linearly(self):
        base = variance_spectrum(*prepare(two_level(2.0, 0.5)), SMALL_GRID)
        doubled = variance_spectrum(
            *prepare(two_level(2.0, 0.5, geometry_factor=2.0)), SMALL_GRID
        )
        np.testing.assert_allclose(doubled.values, 2.0 * base.values, rtol=1e-12)
        assert doubled.coherent_weight == pytest.approx(2.0 * base.coherent_weight)

    def test_detuning_mirrors_spectrum(self):
        plus = variance_spectrum(*prepare(two_level(3.0, 1.5)), SMALL_GRID)
        minus = variance_spectrum(*prepare(two_level(3.0, -1.5)), SMALL_GRID)
        np.testing.assert_allclose(
            minus.values, plus.values[::-1], atol=1e-12 * plus.peak
        )

    def test_lambda_reduces_to_two_level(self):
        tl = variance_spectrum(*prepare(two_level(3.0, 0.7)), SMALL_GRID)
        reduced = lambda_model(rabi_1=3.0, rabi_2=0.0, detuning_1=0.7, gamma_2=0.0)
        limit, variance = _both(reduced)
        for result in (limit, variance):
            np.testing.assert_allclose(
                result.values, tl.values, rtol=0, atol=1e-12 * tl.peak
            )

    def test_dephasing_broadens_lines(self):
        config = two_level(rabi=0.5)
        plain = variance_spectrum(*prepare(config), SMALL_GRID)
        dephased = variance_spectrum(
            *prepare(two_level(rabi=0.5, dephasing_rate=1.0)), SMALL_GRID
        )
        assert dephased.minimum >= -1e-10 * dephased.peak
        assert dephased.values[-1] / dephased.peak > plain.values[-1] / plain.peak


class TestCoherentWeight:
    @given(any_configs)
    def test_bounded_by_emission(self, config):
        system, ss, ic = prepare(config)
        excited = ic.pair.emitter_levels[0]
        population = ss.rho[excited - 1, excited - 1].real
        bound = config.line_rate * config.geometry_factor * population
        assert coherent_weight(ss, ic.pair, config) <= bound + 1e-12

    def test_saturation(self):
        system, ss, ic = prepare(two_level(rabi=50.0))
        population = ss.rho[1, 1].real
        assert coherent_weight(ss, ic.pair, system.config) <= 0.01 * population

    def test_weak_drive_is_mostly_coherent(self):
        system, ss, ic = prepare(two_level(rabi=0.01))
        population = ss.rho[1, 1].real
        assert coherent_weight(ss, ic.pair, system.config) >= 0.99 * population


class TestSumRule:
    @pytest.fixture(scope="class")
    def wide(self):
        config = two_level(rabi=3.0, detuning=0.5)
        system, ss, ic = prepare(config)
        grid = FrequencyGrid.symmetric(400.0, 16001)
        return ss, limit_spectrum(system, ss, ic, grid), variance_spectrum(
            system, ss, ic, grid
        )

    def test_matches_zero_lag_variance(self, wide):
        ss, _, variance = wide
        p = ss.rho[1, 1].real
        dipole = ss.rho[1, 0]
        expected = math.pi * (p - abs(dipole) ** 2)
        assert integrated_intensity(variance) == pytest.approx(expected, rel=0.01)

    def test_methods_integrate_equally(self, wide):
        _, limit, variance = wide
        assert integrated_intensity(limit) == pytest.approx(
            integrated_intensity(variance), rel=1e-10
        )

    def test_narrow_grid_warns(self, caplog):
        result = variance_spectrum(*prepare(two_level(rabi=3.0)), SMALL_GRID)
        with caplog.at_level(logging.WARNING, logger="fluorspec"):
            integrated_intensity(result)
        assert "grid edges" in caplog.text


class TestInvalidPoints:
    def test_every_point_invalid(self, mocker):
        mocker.patch.object(
            methods, "resolvent_solve", side_effect=ResonantFrequencyError(0j)
        )
        with pytest.raises(FluorspecError, match="every grid point"):
            variance_spectrum(*prepare(two_level()), SMALL_GRID)

    def test_single_invalid_point_is_nan(self, mocker, caplog):
        real_solve = methods.resolvent_solve

        def resonant_at_zero(system, s, v, tol=DEFAULT_TOLERANCES):
            if s == 0:
                raise ResonantFrequencyError(s)
            return real_solve(system, s, v, tol)

        mocker.patch.object(methods, "resolvent_solve", side_effect=resonant_at_zero)
        grid = FrequencyGrid.symmetric(2.0, 5)
        with caplog.at_level(logging.WARNING, logger="fluorspec"):
            result = variance_spectrum(*prepare(two_level()), grid)
        assert result.invalid_points == [2]
        assert math.isnan(result.values[2])
        assert not result.valid_mask[2]
        assert "skipped" in caplog.text


class TestPeakShape:
    GRID = FrequencyGrid.symmetric(10.0, 2001)

    def test_lorentzian(self):
        nu = self.GRID.points()
        result = _synthetic(1.0 / (1.0 + nu**2), self.GRID)
        assert classify_peak(result, int(np.argmax(result.values))) == "lorentzian"

    def test_dispersive(self):
        nu = self.GRID.points()
        result = _synthetic((1.0 + 2.0 * nu) / (1.0 + nu**2), self.GRID)
        assert classify_peak(result, int(np.argmax(result.values))) == "dispersive"

    def test_edge_peak_is_found(self):
        nu = self.GRID.points()
        result = _synthetic(np.exp(-nu), self.GRID)
        assert list(peak_indices(result)) == [0]


@settings(max_examples=5)
@given(any_configs)
def test_invalid_list_empty_for_damped_systems(config):
    limit, variance = _both(config)
    assert limit.invalid_points == [] and variance.invalid_points == []
