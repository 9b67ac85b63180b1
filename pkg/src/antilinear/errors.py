"""Exception types shared across the package.

The CLI and HTTP service map these onto exit codes / response kinds, so the
split between "your input is bad" and "the numerics broke" is part of the
public contract.
"""


class InvalidDataError(ValueError):
    """Input violates a documented precondition or data invariant."""


class NumericError(RuntimeError):
    """A numerical procedure failed its internal consistency checks."""
