"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured work budget."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold was violated (indicates a bug)."""
