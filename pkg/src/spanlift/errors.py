"""Exception types shared across the library.

Every error raised on purpose by this package derives from SpanliftError,
so callers can catch one base class at API boundaries (the CLI does).
"""

__all__ = [
    "SpanliftError",
    "MalformedTuple",
    "DanglingArc",
    "NonPlanar",
    "MalformedCode",
    "NonRealizable",
    "SplitDomainMismatch",
    "NonIntegerGenus",
    "BoundExceeded",
    "NotReduced",
    "NotAlternating",
    "Disconnected",
    "OddSlope",
    "SchemaError",
    "DiagramInvalid",
]


class SpanliftError(Exception):
    """Base class for all library errors."""


class MalformedTuple(SpanliftError):
    """PD text fails to parse: bad token, empty input, or a stray U."""


class DanglingArc(SpanliftError):
    """An arc label is not used exactly twice across the crossing tuples."""


class NonPlanar(SpanliftError):
    """Face traversal contradicts the Euler formula for a sphere embedding."""


class MalformedCode(SpanliftError):
    """Gauss code fails to parse or declares an inconsistent passage set."""


class NonRealizable(SpanliftError):
    """Gauss code parses but admits no planar realization."""


class SplitDomainMismatch(SpanliftError):
    """A state does not assign exactly one split letter per crossing."""


class NonIntegerGenus(SpanliftError):
    """An orientable surface reported an odd 2 - euler - boundary count."""


class BoundExceeded(SpanliftError):
    """Exhaustive enumeration was requested above the configured cap."""


class NotReduced(SpanliftError):
    """The operation requires a diagram with no nugatory crossing."""


class NotAlternating(SpanliftError):
    """The operation requires an alternating diagram."""


class Disconnected(SpanliftError):
    """The operation requires a connected diagram."""


class OddSlope(SpanliftError):
    """A queried boundary slope is odd, which no spanning surface attains."""


class SchemaError(SpanliftError):
    """A census file violates the CSV schema."""


class DiagramInvalid(SpanliftError):
    """A census row carries a diagram failing validation.

    Attributes:
        row: 1-based line number of the offending row, when known.
    """

    def __init__(self, message, row=None):
        super().__init__(message if row is None else f"row {row}: {message}")
        self.row = row
