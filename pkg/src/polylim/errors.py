"""Exception types shared across the package."""
from __future__ import annotations

import operator


class PolylimError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PolylimError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class InvalidHarmonicError(DomainError):
    """Requested a harmonic coefficient whose parity cannot occur.

    The cosine expansion of the p-th cotangent derivative contains only
    multipliers j with p + j odd; asking for p + j even is a structural error,
    not merely a zero coefficient.
    """


class HarmonicRangeError(DomainError):
    """Requested a harmonic multiplier at or beyond the derivative order."""


class PoleError(DomainError):
    """Evaluation was requested too close to a pole of the function.

    ``location`` holds the offending pole (an integer for polygamma
    arguments, a real number for raw trigonometric evaluation).
    """

    def __init__(self, message: str, location: float | int | None = None):
        super().__init__(message)
        self.location = location


class TableCapacityError(DomainError):
    """An index exceeds the configured size of a precomputed table."""


class ProbeFailureError(PolylimError, RuntimeError):
    """A limit probe sample tripped a pole guard.

    ``z`` is the offending sample point.
    """

    def __init__(self, message: str, z: float | None = None):
        super().__init__(message)
        self.z = z


def as_index(value, name: str) -> int:
    """Coerce an integral argument (int, numpy integer, ...) to int.

    Floats are rejected even when integral: parity logic downstream must
    never silently truncate.
    """
    try:
        return operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, got {value!r}") from None
