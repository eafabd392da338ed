"""Exception types raised by dpflex."""


class DpflexError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(DpflexError, ValueError):
    """Vectors or cones of incompatible length were combined."""


class DegenerateInputError(DpflexError, ValueError):
    """Input that does not determine the requested object (zero vector, equal points, ...)."""


class UnsupportedDegreeError(DpflexError, ValueError):
    pass


class InvariantViolation(DpflexError, AssertionError):
    """An internal consistency check failed."""


class CurveNotFoundError(DpflexError, LookupError):
    pass


class OracleScopeError(DpflexError, ValueError):
    """The brute-force oracle was asked for a problem above its size guard."""
