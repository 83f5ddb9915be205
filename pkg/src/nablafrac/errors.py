"""Exception types shared across the package."""


class NablaFracError(Exception):
    """Base class for every error raised by this package."""


class DomainError(NablaFracError):
    """A grid index outside the stored domain, or a gamma-quotient pole."""


class EmptyRangeError(NablaFracError):
    """A summation range is empty where a nonempty range is required."""


class WindowError(NablaFracError):
    """The evaluation point lies outside the validity window of a representation."""


class OrderError(NablaFracError):
    """An order parameter has the wrong sign or the wrong integer/non-integer kind."""


class NormalizationError(NablaFracError):
    """An exact gamma quotient was requested whose value is not rational."""


class BoundaryConditionError(NablaFracError):
    """Required zero differences at the base point do not hold."""


class ParameterError(NablaFracError):
    """An argument violates its contract."""


class ParseError(NablaFracError):
    """Malformed textual input."""


class UsageError(NablaFracError):
    """Unknown suite name or inconsistent command-line arguments."""
