"""Numerical tolerances shared by the solvers, the CLI and the tests."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # factorization
    pivot_rel: float = 1e-12
    # eigenvalues of Q
    stability: float = 1e-12
    zero_eigenvalue: float = 1e-12
    # steady state
    residual: float = 1e-10
    hermiticity: float = 1e-12
    density_eigenvalue_floor: float = -1e-10
    # spectra, relative to peak
    equivalence_rel: float = 1e-10
    positivity_rel: float = 1e-10
    oracle_rel: float = 1e-3
    mollow_rel: float = 1e-8
    # time-domain oracle
    correlation_tail: float = 1e-8
    step_rule: float = 0.05
    # sum rule grid check
    boundary_decay: float = 1e-6
    # Raman resonance detection, relative to max(1, |detunings|)
    raman_resonance: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()
