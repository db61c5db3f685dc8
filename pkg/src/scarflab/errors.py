"""Exception types shared across the package.

The CLI maps these onto exit codes: DomainError and UnsupportedError are
usage problems (2), InvariantViolation is a failed property (1) and
ResourceLimitError is a cap hit (3).
"""


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class UnsupportedError(DomainError):
    """The operation exists but not for these parameters (e.g. r > 3)."""


class ResourceLimitError(RuntimeError):
    """A hard size cap would be exceeded."""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class InvariantViolation(AssertionError):
    """Two routes that must agree did not, or a structural invariant broke."""
