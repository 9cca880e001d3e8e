from typing import Any, Optional


class MinimalCIError(Exception):
    """Base class for all errors raised by the minimal CI solver."""


class DomainError(MinimalCIError, ValueError):
    """Raised when an input lies outside the model's domain.

    Examples are a non-positive dilation parameter, an electron count outside
    1..10, an unknown term symbol or atom name, or an integral that the
    five-orbital model never needs.
    """


class QuadratureError(MinimalCIError):
    """Raised when an adaptive quadrature does not reach its tolerance.

    Args:
        message (str): Description of the failing integral.
        achieved (float): Error estimate reported by the integrator.
    """

    def __init__(self, message: str, achieved: float) -> None:
        super().__init__(f"{message} (achieved error estimate {achieved:.3e})")
        self.achieved = achieved


class OptimizationError(MinimalCIError):
    """Raised when the dilation-parameter search fails.

    Args:
        message (str): Description of the failure.
        best (OptimizationResult, optional): Best point found before failing.
    """

    def __init__(self, message: str, best: Optional[Any] = None) -> None:
        super().__init__(message)
        self.best = best


class BoundaryError(OptimizationError):
    """Raised when the optimizer is driven onto the parameter box."""


class ConsistencyError(MinimalCIError):
    """Raised when an oracle finds inconsistent quantum numbers or degeneracies."""
