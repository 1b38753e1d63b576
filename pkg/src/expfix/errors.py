"""Exception types shared across the package."""


class ExpfixError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(ExpfixError, ValueError):
    """Matrix dimensions do not admit the requested operation."""


class DomainError(ExpfixError, ValueError):
    """Argument lies outside the mathematical domain of the function."""


class ConvergenceError(ExpfixError, RuntimeError):
    """An iteration failed to converge.

    Carries the last iterate and its residual so callers can diagnose
    near-misses instead of guessing.
    """

    def __init__(self, message, last_iterate=None, residual=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual = residual


class CatalogError(ExpfixError, LookupError):
    """Requested gate name is not in the catalog."""


class MatrixFormatError(ExpfixError, ValueError):
    """Malformed matrix file; ``line`` holds the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
