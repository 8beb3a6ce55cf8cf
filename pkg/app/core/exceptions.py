"""Custom exceptions for the application."""

from typing import Any, Optional


class BohrNetException(Exception):  # noqa: N818 - Project naming convention
    """Base exception for all application errors."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class DimensionMismatchException(BohrNetException):
    """Matrices or spans from different ambient dimensions were combined."""

    pass


class SpectrumException(BohrNetException):
    """A declared spectrum fails the annihilation test or a generator is not normal."""

    def __init__(
        self,
        message: str,
        residual: Any = None,
        details: Optional[dict[str, Any]] = None,
    ):
        self.residual = residual
        super().__init__(message, details)


class AlgebraMembershipException(BohrNetException):
    """A generator does not lie in the algebra it was declared for."""

    pass


class ContextClosureException(BohrNetException):
    """A context required by an intersection functor is missing from a poset."""

    pass


class RegionException(BohrNetException):
    """Region is outside the window or not causally complete."""

    pass


class CoverException(BohrNetException):
    """Malformed or empty slice cover."""

    pass


class CapExceededException(BohrNetException):
    """An enumeration would exceed its configured cap."""

    def __init__(
        self,
        message: str,
        cap: int,
        bound: Optional[int] = None,
        details: Optional[dict[str, Any]] = None,
    ):
        self.cap = cap
        self.bound = bound
        super().__init__(message, details)


class SpecParseException(BohrNetException):
    """Input file is not valid JSON."""

    pass


class SpecValidationException(BohrNetException):
    """Input file violates the net-spec or projection-dataset schema."""

    pass
