"""Transition operators sigma_ab = |a><b| of a d-level emitter."""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, order=True)
class TransitionOp:
    """The operator |ket><bra| on a ``dimension``-level emitter.

    Levels are labelled 1..d, so ``TransitionOp(ket=3, bra=1, dimension=3)``
    is sigma_31, the raising operator of the 1 -> 3 transition.
    """

    ket: int
    bra: int
    dimension: int

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"dimension must be at least 2, got {self.dimension}")
        for name, level in (("ket", self.ket), ("bra", self.bra)):
            if not 1 <= level <= self.dimension:
                raise ValueError(
                    f"{name} level {level} outside [1, {self.dimension}]"
                )

    @property
    def is_population(self) -> bool:
        return self.ket == self.bra

    @property
    def label(self) -> str:
        return f"sigma_{self.ket}{self.bra}"

    def adjoint(self) -> "TransitionOp":
        return TransitionOp(ket=self.bra, bra=self.ket, dimension=self.dimension)

    def matrix(self) -> np.ndarray:
        """Dense d x d matrix of |ket><bra|."""
        m = np.zeros((self.dimension, self.dimension), dtype=complex)
        m[self.ket - 1, self.bra - 1] = 1.0
        return m

    def __str__(self) -> str:
        return self.label


def sigma(ket: int, bra: int, dimension: int) -> TransitionOp:
    """Shorthand constructor for sigma_{ket,bra}."""
    return TransitionOp(ket=ket, bra=bra, dimension=dimension)


def product(left: TransitionOp, right: TransitionOp) -> Optional[TransitionOp]:
    """Multiply two transition operators: sigma_ab . sigma_cd = delta_bc sigma_ad.

    Returns ``None`` for the zero operator.
    """
    if left.dimension != right.dimension:
        raise ValueError(
            f"cannot multiply operators of dimension {left.dimension} "
            f"and {right.dimension}"
        )
    if left.bra != right.ket:
        return None
    return TransitionOp(ket=left.ket, bra=right.bra, dimension=left.dimension)


def adjoint(op: Optional[TransitionOp]) -> Optional[TransitionOp]:
    return None if op is None else op.adjoint()
