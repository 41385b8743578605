"""Three-level Lambda atom driven by two lasers.

Ground states |1> and |2>, excited state |3>. Laser 1 (rabi_1, detuning_1)
drives |1> <-> |3>, laser 2 (rabi_2, detuning_2) drives |2> <-> |3>. Level
|3> decays to |1> at gamma_1 and to |2> at gamma_2. The ground coherence
rotates at the Raman detuning detuning_1 - detuning_2.
"""

import numpy as np

from fluorspec.algebra import BasisMap, sigma
from fluorspec.schemas import ModelConfig, ModelKind
from fluorspec.tolerances import DEFAULT_TOLERANCES, Tolerances

from .liouvillian import LiouvilleSystem, assemble


def is_raman_dark(config: ModelConfig, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True when both arms are driven on Raman resonance without ground dephasing."""
    if config.rabi_1 <= 0 or config.rabi_2 <= 0 or config.ground_dephasing_rate > 0:
        return False
    scale = max(1.0, abs(config.detuning_1), abs(config.detuning_2))
    return abs(config.detuning_1 - config.detuning_2) <= tol.raman_resonance * scale


def build_lambda(config: ModelConfig) -> LiouvilleSystem:
    """Build the n = 8 system of the Lambda atom.

    Args:
        config: A ``lambda`` model configuration

    Returns:
        LiouvilleSystem flagged ``dark_state`` when the two arms form a
        Raman-resonant dark superposition

    Raises:
        ValueError: If the model tag is not lambda or gamma_1 is not positive
    """
    if config.model is not ModelKind.LAMBDA:
        raise ValueError(f"build_lambda needs model lambda, got {config.model.value}")
    if not config.gamma_1 > 0:
        raise ValueError("gamma_1 must be positive")

    d = 3

    def op(ket: int, bra: int) -> np.ndarray:
        return sigma(ket, bra, d).matrix()

    hamiltonian = (
        -config.detuning_1 * op(3, 3)
        - (config.detuning_1 - config.detuning_2) * op(2, 2)
        + 0.5 * config.rabi_1 * (op(3, 1) + op(1, 3))
        + 0.5 * config.rabi_2 * (op(3, 2) + op(2, 3))
    )
    jumps = [
        (config.gamma_1, sigma(1, 3, d)),
        (config.gamma_2, sigma(2, 3, d)),
        (config.dephasing_rate, sigma(3, 3, d)),
        (config.ground_dephasing_rate, sigma(2, 2, d)),
    ]
    return assemble(
        BasisMap(d), config, hamiltonian, jumps, dark_state=is_raman_dark(config)
    )
