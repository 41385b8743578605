"""Physical emitter models and their Liouvillian matrices."""

from fluorspec.schemas import ModelConfig, ModelKind

from .lambda_system import build_lambda, is_raman_dark
from .liouvillian import LiouvilleSystem, lindblad_rhs, project_lindblad
from .two_level import build_two_level


def build_system(config: ModelConfig) -> LiouvilleSystem:
    """Build the Liouvillian of whichever emitter ``config.model`` names.

    Args:
        config: Validated model configuration

    Returns:
        The (Q, R) system in the trace-eliminated basis
    """
    if config.model is ModelKind.TWO_LEVEL:
        return build_two_level(config)
    return build_lambda(config)


__all__ = [
    "LiouvilleSystem",
    "build_lambda",
    "build_system",
    "build_two_level",
    "is_raman_dark",
    "lindblad_rhs",
    "project_lindblad",
]
