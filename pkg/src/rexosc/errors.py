"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates the precondition of an operation."""


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
