"""Exception types shared across the package."""


class HypervolError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HypervolError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotRealizableError(DomainError):
    """The requested parameters do not correspond to a realizable body."""


class UnsupportedDimensionError(DomainError):
    """Dimension outside the supported range (2..8, or op-specific)."""


class ConvergenceError(HypervolError, RuntimeError):
    """Quadrature failed to reach the requested tolerance within budget.

    Carries the best estimate obtained so far in ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
