"""Exceptions shared across the library."""


class RkhsKitError(Exception):
    """Base class for numerical failures in this package."""


class ConvergenceError(RkhsKitError):
    """Iteration exhausted its budget; carries the final residual."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class NotPsdError(RkhsKitError):
    """Input expected to be positive semidefinite is not."""


class SingularMatrixError(RkhsKitError):
    """Singular or indefinite matrix; carries the failing pivot index."""

    def __init__(self, message, pivot_index):
        super().__init__(f"{message} (pivot {pivot_index})")
        self.pivot_index = pivot_index
