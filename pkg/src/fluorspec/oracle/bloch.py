"""Closed-form steady state of the driven two-level atom.

Coded directly from the optical Bloch equations, independently of the
Lindblad projection, with
H = -detuning sigma_ee + (rabi/2)(sigma_eg + sigma_ge).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class BlochSteadyState:
    excited_population: float
    dipole: complex  # <sigma_ge> = rho_eg

    @property
    def coherent_fraction(self) -> float:
        """|<sigma_eg>|^2 / <sigma_ee>, zero for an undriven atom."""
        if self.excited_population == 0:
            return 0.0
        return abs(self.dipole) ** 2 / self.excited_population

    @property
    def zero_lag_variance(self) -> float:
        """<sigma_ee> - |<sigma_eg>|^2."""
        return self.excited_population - abs(self.dipole) ** 2


def bloch_steady_state(
    rabi: float, detuning: float, gamma: float
) -> BlochSteadyState:
    denominator = detuning**2 + gamma**2 / 4 + rabi**2 / 2
    return BlochSteadyState(
        excited_population=(rabi**2 / 4) / denominator,
        dipole=-0.5j * rabi * (gamma / 2 + 1j * detuning) / denominator,
    )
