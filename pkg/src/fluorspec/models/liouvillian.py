"""Projection of a Lindblad master equation onto dX/dt = Q X + R."""

import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from fluorspec.algebra import BasisMap, TransitionOp
from fluorspec.schemas import ModelConfig

logger = logging.getLogger(__name__)

JumpOperator = Tuple[float, TransitionOp]


@dataclass(frozen=True, eq=False)
class LiouvilleSystem:
    """The (Q, R) pair of one emitter model.

    ``conserved_slots`` lists slots whose equation of motion is identically
    zero; they stay at their ground-state value 0 and are left out of every
    factorization. ``dark_state`` marks a Raman-resonant Lambda system.
    """

    basis: BasisMap
    q: np.ndarray
    r: np.ndarray
    config: ModelConfig
    conserved_slots: Tuple[int, ...] = ()
    dark_state: bool = False

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def active_slots(self) -> np.ndarray:
        conserved = set(self.conserved_slots)
        return np.array([j for j in range(self.n) if j not in conserved], dtype=int)

    def rhs(self, x: np.ndarray) -> np.ndarray:
        return self.q @ x + self.r


def lindblad_rhs(
    rho: np.ndarray, hamiltonian: np.ndarray, jumps: Iterable[Tuple[float, np.ndarray]]
) -> np.ndarray:
    """Right-hand side of the Lindblad master equation (hbar = 1)."""
    drho = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    for rate, c in jumps:
        if rate == 0:
            continue
        cd = c.conj().T
        cdc = cd @ c
        drho += rate * (c @ rho @ cd - 0.5 * (cdc @ rho + rho @ cdc))
    return drho


def project_lindblad(
    basis: BasisMap, hamiltonian: np.ndarray, jumps: Iterable[JumpOperator]
) -> Tuple[np.ndarray, np.ndarray]:
    """Build Q and R slot by slot from the Lindblad form.

    rho is parameterized as rho(X) = E0 + sum_i X_i B_i with the trace
    constraint built in, so Q[j, i] = <op_j>(L[B_i]) and R[j] = <op_j>(L[E0]).
    """
    n = basis.n
    jump_matrices = [(rate, op.matrix()) for rate, op in jumps]
    e0 = basis.density_matrix(np.zeros(n))

    def expectations(m: np.ndarray) -> np.ndarray:
        return basis.vector_from_density(m)

    q = np.zeros((n, n), dtype=complex)
    for i in range(n):
        unit = np.zeros(n, dtype=complex)
        unit[i] = 1.0
        b_i = basis.density_matrix(unit) - e0
        q[:, i] = expectations(lindblad_rhs(b_i, hamiltonian, jump_matrices))
    r = expectations(lindblad_rhs(e0, hamiltonian, jump_matrices))
    return q, r


def find_conserved_slots(q: np.ndarray, r: np.ndarray) -> Tuple[int, ...]:
    return tuple(
        j for j in range(q.shape[0]) if not np.any(q[j]) and r[j] == 0
    )


def assemble(
    basis: BasisMap,
    config: ModelConfig,
    hamiltonian: np.ndarray,
    jumps: Iterable[JumpOperator],
    dark_state: bool = False,
) -> LiouvilleSystem:
    q, r = project_lindblad(basis, hamiltonian, jumps)
    conserved = find_conserved_slots(q, r)
    if conserved:
        labels = ", ".join(basis.op_of(j).label for j in conserved)
        logger.warning(
            "Q has identically zero rows for %s; these slots are conserved "
            "and held at their ground-state value",
            labels,
        )
    logger.debug("Built %s system with n=%d", config.model.value, basis.n)
    return LiouvilleSystem(
        basis=basis,
        q=q,
        r=r,
        config=config,
        conserved_slots=conserved,
        dark_state=dark_state,
    )
