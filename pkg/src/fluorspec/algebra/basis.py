"""Trace-eliminated vector indexing of the expectation vector X."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np

from fluorspec.algebra.operators import TransitionOp, sigma


@dataclass(frozen=True, eq=False)
class LinearForm:
    """An expectation value written as <op> = coefficients . X + constant."""

    coefficients: np.ndarray
    constant: complex = 0.0

    def evaluate(self, x: np.ndarray) -> complex:
        return complex(self.coefficients @ x + self.constant)


@dataclass(frozen=True)
class BasisMap:
    """Slots of the expectation vector for a d-level emitter.

    The ground population sigma_11 is eliminated through trace(rho) = 1.
    Slot order is the remaining populations sigma_22..sigma_dd followed by
    the coherences sigma_ab (a != b) in lexicographic (a, b) order. Slot j
    holds <sigma_ab> = rho[b, a].
    """

    dimension: int
    slots: Tuple[TransitionOp, ...] = field(init=False)

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"dimension must be at least 2, got {self.dimension}")
        d = self.dimension
        populations = [sigma(k, k, d) for k in range(2, d + 1)]
        coherences = [
            sigma(a, b, d)
            for a in range(1, d + 1)
            for b in range(1, d + 1)
            if a != b
        ]
        object.__setattr__(self, "slots", tuple(populations + coherences))

    @property
    def eliminated(self) -> TransitionOp:
        return sigma(1, 1, self.dimension)

    @property
    def n(self) -> int:
        return len(self.slots)

    @cached_property
    def _index(self) -> Dict[TransitionOp, int]:
        return {op: j for j, op in enumerate(self.slots)}

    def index_of(self, op: TransitionOp) -> int:
        """Vector index of a retained operator."""
        self._check_dimension(op)
        try:
            return self._index[op]
        except KeyError:
            raise KeyError(f"{op} is eliminated by the trace constraint") from None

    def op_of(self, j: int) -> TransitionOp:
        return self.slots[j]

    @property
    def population_indices(self) -> List[int]:
        return [j for j, op in enumerate(self.slots) if op.is_population]

    @cached_property
    def adjoint_permutation(self) -> np.ndarray:
        """perm[j] is the slot of adjoint(op_of(j))."""
        return np.array([self._index[op.adjoint()] for op in self.slots])

    def expectation_as_vector_form(self, op: TransitionOp) -> LinearForm:
        """Express <op> as a linear form over (X, 1)."""
        self._check_dimension(op)
        coefficients = np.zeros(self.n, dtype=complex)
        if op == self.eliminated:
            coefficients[self.population_indices] = -1.0
            return LinearForm(coefficients=coefficients, constant=1.0)
        coefficients[self._index[op]] = 1.0
        return LinearForm(coefficients=coefficients, constant=0.0)

    def density_matrix(self, x: np.ndarray) -> np.ndarray:
        """Rebuild rho from X using the trace constraint."""
        x = np.asarray(x, dtype=complex)
        if x.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}, got {x.shape}")
        rho = np.zeros((self.dimension, self.dimension), dtype=complex)
        for j, op in enumerate(self.slots):
            rho[op.bra - 1, op.ket - 1] = x[j]
        rho[0, 0] = 1.0 - sum(x[j] for j in self.population_indices)
        return rho

    def vector_from_density(self, rho: np.ndarray) -> np.ndarray:
        """Project a density matrix onto the slots; rho[0, 0] is dropped."""
        rho = np.asarray(rho, dtype=complex)
        return np.array([rho[op.bra - 1, op.ket - 1] for op in self.slots])

    def _check_dimension(self, op: TransitionOp):
        if op.dimension != self.dimension:
            raise ValueError(
                f"{op} has dimension {op.dimension}, basis has {self.dimension}"
            )
