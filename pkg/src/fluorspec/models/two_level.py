"""Driven two-level atom: optical Bloch equations in the laser frame."""

import numpy as np

from fluorspec.algebra import BasisMap, sigma
from fluorspec.schemas import ModelConfig, ModelKind

from .liouvillian import LiouvilleSystem, assemble


def build_two_level(config: ModelConfig) -> LiouvilleSystem:
    """Build the n = 3 system for X = (<sigma_22>, <sigma_12>, <sigma_21>).

    Level 1 is the ground state and level 2 the excited state. In the frame
    rotating at the laser frequency, H = -detuning_1 sigma_22
    + (rabi_1 / 2)(sigma_21 + sigma_12), with spontaneous decay 2 -> 1 at
    gamma_1 and optional pure dephasing of level 2.

    Raises:
        ValueError: If the model tag is not two_level or gamma_1 is not positive
    """
    if config.model is not ModelKind.TWO_LEVEL:
        raise ValueError(
            f"build_two_level needs model two_level, got {config.model.value}"
        )
    if not config.gamma_1 > 0:
        raise ValueError("gamma_1 must be positive")

    d = 2
    hamiltonian = (
        -config.detuning_1 * sigma(2, 2, d).matrix()
        + 0.5 * config.rabi_1 * (sigma(2, 1, d).matrix() + sigma(1, 2, d).matrix())
    )
    jumps = [
        (config.gamma_1, sigma(1, 2, d)),
        (config.dephasing_rate, sigma(2, 2, d)),
    ]
    return assemble(BasisMap(d), config, np.asarray(hamiltonian), jumps)
