"""Operator algebra for d-level emitters."""

from .basis import BasisMap, LinearForm
from .operators import TransitionOp, adjoint, product, sigma

__all__ = [
    "BasisMap",
    "LinearForm",
    "TransitionOp",
    "adjoint",
    "product",
    "sigma",
]
