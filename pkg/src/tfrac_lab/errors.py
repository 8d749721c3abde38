"""Exception types shared across the package."""

from __future__ import annotations


class TfracError(Exception):
    """Base class for all package errors."""


class NonUnitConstantTerm(TfracError):
    pass


class OddDeltaNonzero(TfracError):
    pass


class TerminatingFraction(TfracError):
    """Raised when a recovered beta vanishes before the requested depth.

    The coefficients recovered so far are kept on ``partial``.
    """

    def __init__(self, message: str, partial=None, depth: int = 0):
        super().__init__(message)
        self.partial = partial
        self.depth = depth


class ArityMismatch(TfracError):
    pass


class LabelOutOfRange(TfracError):
    pass


class InvalidTree(TfracError):
    pass


class NetworkUnavailable(TfracError):
    pass


class MalformedResponse(TfracError):
    pass


class InvalidQuery(TfracError):
    pass


class SingularDiagonal(TfracError):
    pass
