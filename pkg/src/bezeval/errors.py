"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation.

    Raised for parameters outside [0,1] (or the barycentric triangle),
    nonpositive weights, dimension mismatches, zero or nonfinite basis
    values, and similar contract violations.
    """


class ParseError(ValueError):
    """A curve/surface text file could not be parsed."""
