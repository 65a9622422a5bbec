"""Exception types raised across the package.

Every error derives from :class:`AqjlError` so callers (the CLI in particular)
can separate domain failures from programming errors.
"""

from __future__ import annotations


class AqjlError(ValueError):
    """Base class for domain errors."""


class InvalidPartition(AqjlError):
    pass


class NotSelfDual(AqjlError):
    """The highest weight is not essentially self-dual."""


class UnsupportedSplitPartition(AqjlError):
    """No closed Poincare formula for a GL_n(R) partition with a nonzero n_0 block."""


class OddPart(AqjlError):
    pass


class InvalidDirection(AqjlError):
    """A transfer was asked to go from the quaternionic side."""


class NotAlgebraic(AqjlError):
    pass


class InexactDivision(AqjlError):
    pass


class NonTemperedNonsplitComponent(AqjlError):
    pass


class TransferNotCuspidal(AqjlError):
    """The descriptor does not assert that its global transfer is cuspidal."""


class ComplexPlaceUnsupported(AqjlError):
    pass


class NoUnramifiedPlaces(AqjlError):
    pass
