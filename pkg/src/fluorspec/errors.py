"""Exceptions raised by the spectrum pipeline."""


class FluorspecError(Exception):
    """Base class for all fluorspec failures."""


class SingularLiouvillianError(FluorspecError):
    """The Liouvillian matrix Q cannot be inverted."""

    def __init__(self, detail: str):
        super().__init__(f"singular Liouvillian: {detail}")


class ResonantFrequencyError(FluorspecError):
    """A resolvent solve hit an eigenvalue of Q."""

    def __init__(self, s: complex):
        self.s = s
        super().__init__(f"resonant s: (sI - Q) is singular at s = {s!r}")


class TruncationError(FluorspecError):
    """A time-domain correlation series has not decayed by t_max."""


class ConfigError(FluorspecError, ValueError):
    """A run configuration is malformed."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message)
