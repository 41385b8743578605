"""Quantum regression theorem: initial data for two-time correlators.

For the fixed operator B on the right, Y_k(tau) = <sigma_k(tau) B(0)>
= trace(sigma_k e^{L tau}[B rho_ss]). The operator e^{L tau}[B rho_ss] obeys
the master equation but carries trace <B>, so Y obeys
dY/dtau = Q Y + <B> R. With B on the left, B rho_ss becomes rho_ss B and
the trace is again <B>.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from fluorspec.algebra import TransitionOp, product, sigma
from fluorspec.models.liouvillian import LiouvilleSystem
from fluorspec.schemas import ModelConfig, ModelKind
from fluorspec.solvers.dynamics import SteadyState


class Side(str, Enum):
    FIXED_ON_RIGHT = "fixed_on_right"
    FIXED_ON_LEFT = "fixed_on_left"


@dataclass(frozen=True)
class DetectionPair:
    """``observed`` is taken at the later time, ``fixed`` at the earlier one."""

    observed: TransitionOp
    fixed: TransitionOp
    side: Side = Side.FIXED_ON_RIGHT

    def __post_init__(self):
        if self.observed.dimension != self.fixed.dimension:
            raise ValueError("observed and fixed operators differ in dimension")
        if self.observed.is_population:
            raise ValueError(f"observed operator {self.observed} must be a coherence")

    @property
    def is_physical(self) -> bool:
        return self.observed == self.fixed.adjoint()

    @property
    def emitter_levels(self) -> tuple:
        """(excited, ground) levels of the observed line sigma_eg."""
        return self.observed.ket, self.observed.bra


def emission_pair(
    config: ModelConfig, side: Side = Side.FIXED_ON_RIGHT
) -> DetectionPair:
    """The dipole pair of the detected emission line of ``config``."""
    if config.model is ModelKind.TWO_LEVEL:
        excited, ground, d = 2, 1, 2
    else:
        excited, ground, d = 3, config.emission_line, 3
    return DetectionPair(
        observed=sigma(excited, ground, d),
        fixed=sigma(ground, excited, d),
        side=side,
    )


@dataclass(frozen=True, eq=False)
class CorrelationIC:
    """Y(0), Delta Y(0) = Y(0) - <fixed> X(inf), and the scale <fixed>."""

    y0: np.ndarray
    dy0: np.ndarray
    inhomogeneous_scale: complex
    pair: DetectionPair
    observed_slot: int

    @property
    def zero_lag_variance(self) -> complex:
        """<Delta observed Delta fixed> at tau = 0."""
        return complex(self.dy0[self.observed_slot])


def regression_initial(
    system: LiouvilleSystem, ss: SteadyState, pair: DetectionPair
) -> CorrelationIC:
    """Initial values of the two-time correlators for ``pair``.

    Args:
        system: The emitter's (Q, R) pair
        ss: Steady state of ``system``
        pair: Observed and fixed operators, and the side the fixed one sits on

    Returns:
        CorrelationIC with Y(0), the fluctuation Delta Y(0) and <fixed>

    Raises:
        ValueError: If the pair and the system differ in dimension
    """
    basis = system.basis
    if pair.observed.dimension != basis.dimension:
        raise ValueError(
            f"detection pair has dimension {pair.observed.dimension}, "
            f"system has {basis.dimension}"
        )

    def expect(op) -> complex:
        if op is None:
            return 0j
        return basis.expectation_as_vector_form(op).evaluate(ss.x_inf)

    y0 = np.zeros(basis.n, dtype=complex)
    for k, op_k in enumerate(basis.slots):
        if pair.side is Side.FIXED_ON_RIGHT:
            y0[k] = expect(product(op_k, pair.fixed))
        else:
            y0[k] = expect(product(pair.fixed, op_k))

    scale = expect(pair.fixed)
    return CorrelationIC(
        y0=y0,
        dy0=y0 - scale * ss.x_inf,
        inhomogeneous_scale=scale,
        pair=pair,
        observed_slot=basis.index_of(pair.observed),
    )
