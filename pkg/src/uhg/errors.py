"""Exception hierarchy shared across the package."""

from __future__ import annotations


class UhgError(Exception):
    """Base class for all package errors."""


class GraphFormatError(UhgError):
    """Malformed graph6/sparse6 text.

    Attributes:
        offset: byte offset of the first offending byte, or None.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class MissingEdgeError(UhgError):
    """An operation referenced an edge that is not present."""


class PreconditionError(UhgError):
    """An operation's precondition does not hold for the given input."""


class BudgetExceededError(UhgError):
    """A verification ran out of its step budget before exhausting the space."""


class SpliceError(UhgError):
    """A splice site or plugin is invalid, or the splice cannot be executed."""


class PlanError(UhgError):
    """No valid splice plan exists; carries the first failing site."""

    def __init__(self, message: str, failing_site=None):
        super().__init__(message)
        self.failing_site = failing_site


class NoEvenDegreeError(UhgError):
    """The target degree set contains no even number, so no uniquely
    hamiltonian (multi)graph realizes it."""


class UnknownSeedError(UhgError):
    """Realization would require a seed parameter for which no seed is known
    (realizing {4} alone needs a 4-seed)."""


class UnsupportedDegreeError(UhgError):
    """A requested degree is outside the range the construction supports."""


class CatalogError(UhgError):
    """A catalog entry could not be reconstructed within its constraints."""


class SearchIncompleteError(UhgError):
    """A search exhausted its budget; partial results are attached."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
