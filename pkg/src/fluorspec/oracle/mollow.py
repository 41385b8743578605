"""Analytic resonant spectrum of the driven two-level atom.

On resonance the fluctuation equations split: the symmetric dipole
combination w = <sigma_ge> + <sigma_eg> decays alone at gamma/2, while the
antisymmetric one z and the population p obey a 2 x 2 system with
characteristic polynomial D(s) = (s + gamma)(s + gamma/2) + rabi^2. The
cubic det(sI - Q) is therefore (s + gamma/2) D(s), and the observed
component (w - z)/2 is summed over its three poles.
"""

import cmath

import numpy as np

from fluorspec.schemas import FrequencyGrid
from fluorspec.spectrum.result import SpectrumMethod, SpectrumResult

from .bloch import bloch_steady_state

DEGENERATE_ROOTS = 1e-9


def mollow_poles(rabi: float, gamma: float) -> np.ndarray:
    """The three eigenvalues of the resonant two-level Q."""
    root = cmath.sqrt(gamma**2 / 16 - rabi**2)
    return np.array([-gamma / 2, -0.75 * gamma + root, -0.75 * gamma - root])


def mollow_reference(
    omega_rabi: float,
    gamma: float,
    grid: FrequencyGrid,
    detuning: float = 0.0,
    geometry_factor: float = 1.0,
) -> SpectrumResult:
    """Incoherent resonant spectrum; grid detunings are in units of gamma.

    Args:
        omega_rabi: Rabi frequency, positive
        gamma: Spontaneous decay rate, positive
        grid: Detunings nu, in units of gamma
        detuning: Must be 0
        geometry_factor: Detector geometry factor u

    Returns:
        SpectrumResult tagged MOLLOW_ANALYTIC

    Raises:
        ValueError: Off resonance, or for a non-positive rate
    """
    if detuning != 0:
        raise ValueError(
            "mollow_reference covers the resonant case only (detuning = 0)"
        )
    if omega_rabi <= 0 or gamma <= 0:
        raise ValueError("omega_rabi and gamma must be positive")

    bloch = bloch_steady_state(omega_rabi, 0.0, gamma)
    p, u = bloch.excited_population, bloch.dipole
    # fluctuation initial values for the pair (sigma_eg observed, sigma_ge fixed)
    dp0 = -u * p
    du0 = -(u**2)
    dv0 = p - abs(u) ** 2
    dw0 = du0 + dv0
    dz0 = du0 - dv0

    _, lam_plus, lam_minus = mollow_poles(omega_rabi, gamma)
    s = 1j * grid.points() * gamma

    def numerator(x):
        return (x + gamma) * dz0 + 2j * omega_rabi * dp0

    if abs(lam_plus - lam_minus) > DEGENERATE_ROOTS * gamma:
        a_plus = numerator(lam_plus) / (lam_plus - lam_minus)
        a_minus = numerator(lam_minus) / (lam_minus - lam_plus)
        z = a_plus / (s - lam_plus) + a_minus / (s - lam_minus)
    else:
        z = numerator(s) / ((s - lam_plus) * (s - lam_minus))
    w = dw0 / (s + gamma / 2)
    v = 0.5 * (w - z)

    prefactor = gamma * geometry_factor
    return SpectrumResult(
        grid=grid,
        values=prefactor * v.real,
        coherent_weight=prefactor * abs(u) ** 2,
        method=SpectrumMethod.MOLLOW_ANALYTIC,
        frequency_unit=gamma,
    )
