"""
Exception hierarchy for the Randić energy toolkit.

Every error raised on purpose by the library derives from RandicError.
Problems with caller-supplied input also derive from ValueError so that
callers that only know about ValueError keep working.
"""

from typing import Optional


class RandicError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(RandicError, ValueError):
    """A constructor or operation received parameters outside its domain."""


class Graph6ParseError(RandicError, ValueError):
    """A graph6 string is empty, malformed or uses the unsupported long form."""


class RegularityError(RandicError, ValueError):
    """A regular-graph formula was applied to a graph that is not k-regular."""


class SizeLimitError(RandicError, ValueError):
    """A matrix exceeds the size an exact exponential-time routine accepts."""


class ConfigurationError(RandicError, ValueError):
    """An environment setting could not be parsed."""


class ConvergenceError(RandicError, ArithmeticError):
    """
    The Jacobi eigensolver did not reach the requested accuracy.

    Attributes:
        residual: Best max-norm eigenpair residual reached
        sweeps: Number of sweeps performed
    """

    def __init__(self, message: str, residual: float, sweeps: Optional[int] = None):
        super().__init__(message)
        self.residual = residual
        self.sweeps = sweeps


class InternalConsistencyError(RandicError, ArithmeticError):
    """An exact computation violated an identity that must hold."""


class CatalogMismatchError(RandicError, RuntimeError):
    """Enumerated cubic graphs and the tabulated polynomials do not pair up."""
