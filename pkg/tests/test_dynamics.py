import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fluorspec.algebra import sigma
from fluorspec.errors import ResonantFrequencyError, SingularLiouvillianError
from fluorspec.models import build_system
from fluorspec.oracle import bloch_steady_state, mollow_poles, relax
from fluorspec.solvers import (
    EigenResolvent,
    eigen_report,
    factorize_q,
    resolvent_solve,
    steady_state,
)
from fluorspec.tolerances import DEFAULT_TOLERANCES

from helpers import any_configs, detunings, gammas, lambda_model, rabis, two_level


class TestSteadyState:
    @given(rabis, detunings, gammas)
    def test_matches_bloch_closed_form(self, rabi, detuning, gamma):
        system = build_system(two_level(rabi, detuning, gamma))
        ss = steady_state(system)
        bloch = bloch_steady_state(rabi, detuning, gamma)
        basis = system.basis
        assert ss.x_inf[basis.index_of(sigma(2, 2, 2))] == pytest.approx(
            bloch.excited_population, abs=1e-12
        )
        assert ss.x_inf[basis.index_of(sigma(1, 2, 2))] == pytest.approx(
            bloch.dipole, abs=1e-12
        )
        assert ss.x_inf[basis.index_of(sigma(2, 1, 2))] == pytest.approx(
            np.conj(bloch.dipole), abs=1e-12
        )

    @given(any_configs)
    def test_physical(self, config):
        system = build_system(config)
        ss = steady_state(system)
        tol = DEFAULT_TOLERANCES
        diagnostics = ss.diagnostics()
        r_norm = np.max(np.abs(system.r))
        assert diagnostics["residual"] <= tol.residual * (1 + r_norm)
        assert diagnostics["hermiticity"] <= tol.hermiticity
        assert diagnostics["trace_error"] <= 1e-15
        assert diagnostics["min_eigenvalue"] >= tol.density_eigenvalue_floor

    def test_undriven_atom_stays_in_ground_state(self):
        ss = steady_state(build_system(two_level(rabi=0.0, detuning=3.0)))
        np.testing.assert_array_equal(ss.x_inf, np.zeros(3))

    def test_relaxation_reaches_steady_state(self):
        system = build_system(two_level(rabi=2.0, detuning=0.5))
        x = relax(system, t_max=80.0, dt=0.01)
        np.testing.assert_allclose(x, steady_state(system).x_inf, atol=1e-8)

    def test_lambda_relaxation_reaches_steady_state(self, lambda_pipeline):
        system, ss, _ = lambda_pipeline
        decay = eigen_report(system).slowest_decay
        x = relax(system, t_max=40.0 / decay, dt=0.005)
        np.testing.assert_allclose(x, ss.x_inf, atol=1e-8)

    def test_dark_state_is_singular(self):
        system = build_system(lambda_model(detuning_1=0.5, detuning_2=0.5))
        with pytest.raises(SingularLiouvillianError, match="dark state"):
            factorize_q(system)


class TestResolvent:
    def test_large_s_limit(self, lambda_pipeline):
        system = lambda_pipeline.system
        v = np.arange(1, system.n + 1, dtype=complex)
        s = 1e8j
        np.testing.assert_allclose(s * resolvent_solve(system, s, v), v, rtol=1e-6)

    @given(any_configs, st.floats(min_value=-30.0, max_value=30.0))
    def test_solves_shifted_system(self, config, nu):
        system = build_system(config)
        v = np.ones(system.n, dtype=complex)
        s = 1j * nu
        y = resolvent_solve(system, s, v)
        residual = s * y - system.q @ y - v
        assert np.max(np.abs(residual)) <= 1e-10 * (1 + np.max(np.abs(y)))

    @given(any_configs, st.floats(min_value=-30.0, max_value=30.0))
    def test_eigen_path_agrees(self, config, nu):
        system = build_system(config)
        v = np.linspace(-1, 1, system.n) + 0.5j
        s = 0.1 + 1j * nu
        direct = resolvent_solve(system, s, v)
        eigen = EigenResolvent(system).solve(s, v)
        scale = np.max(np.abs(direct))
        np.testing.assert_allclose(eigen, direct, atol=1e-8 * scale)

    def test_linear_in_source(self, lambda_pipeline):
        system = lambda_pipeline.system
        rng = np.random.default_rng(3)
        a, b = rng.normal(size=(2, system.n)) + 0j
        s = 2.5j
        combined = resolvent_solve(system, s, 2.0 * a - 3.0 * b)
        separate = 2.0 * resolvent_solve(system, s, a) - 3.0 * resolvent_solve(
            system, s, b
        )
        np.testing.assert_allclose(combined, separate, atol=1e-12)

    def test_identity_columns(self):
        system = build_system(two_level(rabi=1.5, detuning=-0.4))
        s = 0.7j
        columns = np.column_stack(
            [resolvent_solve(system, s, e) for e in np.eye(system.n, dtype=complex)]
        )
        product = (s * np.eye(system.n) - system.q) @ columns
        np.testing.assert_allclose(product, np.eye(system.n), atol=1e-13)

    @pytest.mark.parametrize("s", [-0.5, -1.0])
    def test_eigenvalue_is_resonant(self, s):
        system = build_system(two_level(rabi=0.0))
        with pytest.raises(ResonantFrequencyError, match="resonant s"):
            resolvent_solve(system, s, np.ones(3))
        with pytest.raises(ResonantFrequencyError):
            EigenResolvent(system).solve(s, np.ones(3))

    def test_conserved_slots_are_solved_separately(self):
        system = build_system(
            lambda_model(rabi_1=2.0, rabi_2=0.0, detuning_1=0.3, gamma_2=0.0)
        )
        assert system.conserved_slots
        v = np.ones(system.n, dtype=complex)
        s = 1.5j
        y = resolvent_solve(system, s, v)
        np.testing.assert_allclose(s * y - system.q @ y, v, atol=1e-12)


class TestEigenReport:
    def test_resonant_two_level_poles(self):
        rabi = 4.0
        report = eigen_report(build_system(two_level(rabi=rabi)))
        expected = mollow_poles(rabi, 1.0)
        key = np.lexsort((-expected.imag, -expected.real))
        np.testing.assert_allclose(report.eigenvalues, expected[key], atol=1e-12)
        assert report.slowest_decay == pytest.approx(0.5)
        assert report.fastest_rate == pytest.approx(np.max(np.abs(expected)))
        assert report.is_stable()

    def test_sorted_by_real_part(self, lambda_pipeline):
        real = eigen_report(lambda_pipeline.system).eigenvalues.real
        assert np.all(np.diff(real) <= 1e-12)

    def test_reduced_lambda_has_zero_mode(self):
        system = build_system(
            lambda_model(rabi_1=2.0, rabi_2=0.0, detuning_1=0.3, gamma_2=0.0)
        )
        report = eigen_report(system)
        assert report.max_real_part == pytest.approx(0.0, abs=1e-12)
        assert report.slowest_decay > 0
