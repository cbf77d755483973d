"""Exception types shared across the package."""


class RelamError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidBoostError(RelamError):
    """Boost velocity with magnitude >= 1 (speed of light)."""


class ZeroNormError(RelamError):
    """Spectrum or field with vanishing total norm."""


class MixedMassError(RelamError):
    """Spectrum mixing components of different rest mass."""


class UnsupportedRepresentationError(RelamError):
    """Operation needs a structured spectrum (ring or grid), not a cloud."""


class NonTimelikeError(RelamError):
    """Mean four-momentum is not timelike; no rest frame exists."""


class BoundaryLeakageError(RelamError):
    """Amplitude has not decayed at the edge of a grid."""


class SpectrumFormatError(RelamError):
    """Malformed spectrum file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
