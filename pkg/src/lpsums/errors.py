"""Exception types shared across the package.

The CLI maps these onto exit codes: ValidationError -> 2, the
degenerate/runtime family (DegenerateInputError, NotEnumerableError,
ConstructionError) -> 3.
"""


class LpsumsError(Exception):
    """Base class for all package errors."""


class ValidationError(LpsumsError):
    """Malformed input: bad JSON, shape mismatch, illegal exponent, ..."""


class DimensionMismatchError(ValidationError):
    """Coordinate array length does not match the owning space."""


class DegenerateInputError(LpsumsError):
    """An operation that requires a nonzero element received zero."""


class NotEnumerableError(LpsumsError):
    """Extreme-point enumeration was requested but the set is infinite
    (or exceeds the configured cap)."""


class ConstructionError(LpsumsError):
    """A parametric construction failed, e.g. a bisection bracket that
    does not straddle its target."""
