"""Linear-algebra services on a LiouvilleSystem.

Every solve acts on the active block of Q: conserved slots (identically
zero rows) obey s * y_c = v_c and are substituted before factorizing.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg
from scipy.linalg import LinAlgError, LinAlgWarning

from fluorspec.errors import (
    FluorspecError,
    ResonantFrequencyError,
    SingularLiouvillianError,
)
from fluorspec.models.liouvillian import LiouvilleSystem
from fluorspec.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


class _SingularShift(Exception):
    """(sI - Q) failed the pivot test."""


@dataclass(frozen=True, eq=False)
class SteadyState:
    """Stationary expectation vector X(inf) = -Q^-1 R and its density matrix."""

    x_inf: np.ndarray
    rho: np.ndarray
    residual: float
    conserved_slots: Tuple[int, ...] = ()

    def expectation(self, slot: int) -> complex:
        return complex(self.x_inf[slot])

    def diagnostics(self) -> dict:
        """Physicality measures of rho."""
        rho = self.rho
        return {
            "residual": self.residual,
            "hermiticity": float(np.max(np.abs(rho - rho.conj().T))),
            "trace_error": float(abs(np.trace(rho) - 1.0)),
            "min_eigenvalue": float(
                np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)))
            ),
        }


class ShiftedSolver:
    """A pivoted LU factorization of (sI - Q) restricted to the active block."""

    def __init__(
        self,
        system: LiouvilleSystem,
        s: complex,
        tol: Tolerances = DEFAULT_TOLERANCES,
    ):
        self.system = system
        self.s = complex(s)
        self._active = system.active_slots
        self._conserved = np.array(system.conserved_slots, dtype=int)
        q_aa = system.q[np.ix_(self._active, self._active)]
        shifted = self.s * np.eye(len(self._active)) - q_aa
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", LinAlgWarning)
            self._lu = scipy.linalg.lu_factor(shifted)
        scale = np.linalg.norm(shifted, ord=np.inf)
        smallest_pivot = np.min(np.abs(np.diag(self._lu[0])))
        if scale == 0 or smallest_pivot < tol.pivot_rel * scale:
            raise _SingularShift(
                f"smallest pivot {smallest_pivot:.3e} against norm {scale:.3e}"
            )

    def solve(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        y = np.zeros(self.system.n, dtype=complex)
        rhs = v[self._active].copy()
        if self._conserved.size:
            v_c = v[self._conserved]
            if np.any(v_c):
                if self.s == 0:
                    raise _SingularShift("conserved slots carry a source at s = 0")
                y[self._conserved] = v_c / self.s
                coupling = self.system.q[np.ix_(self._active, self._conserved)]
                rhs += coupling @ y[self._conserved]
        y[self._active] = scipy.linalg.lu_solve(self._lu, rhs)
        return y


def factorize_q(
    system: LiouvilleSystem, tol: Tolerances = DEFAULT_TOLERANCES
) -> ShiftedSolver:
    """Factor -Q once; ``solve(v)`` then returns -Q^-1 v."""
    if system.dark_state:
        raise SingularLiouvillianError(
            "Raman resonance (detuning_1 == detuning_2) with both lasers on "
            "traps the atom in a dark state"
        )
    try:
        return ShiftedSolver(system, 0.0, tol)
    except _SingularShift as e:
        raise SingularLiouvillianError(str(e)) from None


def steady_state(
    system: LiouvilleSystem, tol: Tolerances = DEFAULT_TOLERANCES
) -> SteadyState:
    """Solve Q x = -R by a pivoted dense factorization.

    Args:
        system: The emitter's (Q, R) pair
        tol: Pivot threshold and related tolerances

    Returns:
        SteadyState holding X(inf), its density matrix and the residual

    Raises:
        SingularLiouvillianError: If Q fails the pivot test or the system
            is flagged as a Raman dark state
    """
    try:
        x_inf = factorize_q(system, tol).solve(system.r)
    except _SingularShift as e:
        raise SingularLiouvillianError(str(e)) from None
    residual = float(np.max(np.abs(system.rhs(x_inf))))
    rho = system.basis.density_matrix(x_inf)
    logger.debug("Steady state residual %.3e", residual)
    return SteadyState(
        x_inf=x_inf,
        rho=rho,
        residual=residual,
        conserved_slots=system.conserved_slots,
    )


def resolvent_solve(
    system: LiouvilleSystem,
    s: complex,
    v: np.ndarray,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Return y with (sI - Q) y = v from a fresh factorization at s.

    Raises:
        ResonantFrequencyError: If s sits on an eigenvalue of Q
    """
    try:
        return ShiftedSolver(system, s, tol).solve(v)
    except _SingularShift:
        raise ResonantFrequencyError(s) from None


class EigenResolvent:
    """Resolvent evaluated through one eigendecomposition Q = V diag(w) V^-1."""

    def __init__(
        self, system: LiouvilleSystem, tol: Tolerances = DEFAULT_TOLERANCES
    ):
        self.system = system
        self.tol = tol
        self._active = system.active_slots
        self._conserved = np.array(system.conserved_slots, dtype=int)
        q_aa = system.q[np.ix_(self._active, self._active)]
        try:
            self.eigenvalues, self._v = scipy.linalg.eig(q_aa)
            self._v_inv = scipy.linalg.inv(self._v)
        except LinAlgError as e:
            raise FluorspecError(f"eigendecomposition of Q failed: {e}") from e
        logger.debug("Eigenvector condition number %.3e", np.linalg.cond(self._v))

    def solve(self, s: complex, v: np.ndarray) -> np.ndarray:
        s = complex(s)
        v = np.asarray(v, dtype=complex)
        y = np.zeros(self.system.n, dtype=complex)
        rhs = v[self._active].copy()
        if self._conserved.size and np.any(v[self._conserved]):
            if s == 0:
                raise ResonantFrequencyError(s)
            y[self._conserved] = v[self._conserved] / s
            coupling = self.system.q[np.ix_(self._active, self._conserved)]
            rhs += coupling @ y[self._conserved]
        gaps = s - self.eigenvalues
        scale = max(1.0, float(np.max(np.abs(self.eigenvalues), initial=0.0)))
        if np.min(np.abs(gaps)) < self.tol.pivot_rel * scale:
            raise ResonantFrequencyError(s)
        y[self._active] = self._v @ ((self._v_inv @ rhs) / gaps)
        return y


@dataclass(frozen=True, eq=False)
class EigenReport:
    """Eigenvalues of Q sorted by real part, largest first."""

    eigenvalues: np.ndarray
    max_real_part: float
    slowest_decay: Optional[float]
    fastest_rate: float

    def is_stable(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return self.max_real_part <= tol.stability


def eigen_report(
    system: LiouvilleSystem, tol: Tolerances = DEFAULT_TOLERANCES
) -> EigenReport:
    """Eigenvalues of the full Q, conserved slots included.

    Args:
        system: The emitter's (Q, R) pair
        tol: ``zero_eigenvalue`` decides which eigenvalues count as zero

    Returns:
        EigenReport with the spectrum sorted by real part, the slowest
        nonzero decay rate (None if there is none) and max |lambda|

    Raises:
        FluorspecError: If the eigensolver does not converge
    """
    try:
        eigenvalues = scipy.linalg.eigvals(system.q)
    except LinAlgError as e:
        raise FluorspecError(f"eigensolver failed on Q: {e}") from e
    order = np.lexsort((-eigenvalues.imag, -eigenvalues.real))
    eigenvalues = eigenvalues[order]
    nonzero = eigenvalues[np.abs(eigenvalues) >= tol.zero_eigenvalue]
    decays = -nonzero.real[-nonzero.real > tol.zero_eigenvalue]
    return EigenReport(
        eigenvalues=eigenvalues,
        max_real_part=float(eigenvalues.real.max()),
        slowest_decay=float(decays.min()) if decays.size else None,
        fastest_rate=float(np.abs(eigenvalues).max()),
    )
