"""Exception types shared across the package."""


class FqedError(Exception):
    """Base class for all library errors."""


class DomainError(FqedError, ValueError):
    """Invalid input: off-shell momenta, bad indices, violated conservation."""


class PoleError(FqedError, ArithmeticError):
    """Evaluation requested too close to a propagator pole."""


class SingularityError(FqedError, ArithmeticError):
    """Evaluation at a point where the result is genuinely singular."""


class NumericError(FqedError, RuntimeError):
    """A numerical procedure (quadrature, fit) failed to reach its tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class DegenerateLevelError(DomainError):
    """Two spectrum levels coincide but are connected by a nonzero current."""
