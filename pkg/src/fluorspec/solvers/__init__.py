"""Steady state, resolvent and eigenvalue services for Liouvillian systems."""

from .dynamics import (
    EigenReport,
    EigenResolvent,
    ShiftedSolver,
    SteadyState,
    eigen_report,
    factorize_q,
    resolvent_solve,
    steady_state,
)

__all__ = [
    "EigenReport",
    "EigenResolvent",
    "ShiftedSolver",
    "SteadyState",
    "eigen_report",
    "factorize_q",
    "resolvent_solve",
    "steady_state",
]
