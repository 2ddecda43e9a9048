"""Exception hierarchy for the coquat library.

Every library-specific failure derives from :class:`CoquatError` so callers
can catch one base type. Expression-language errors additionally carry a
source span (``start``, ``end`` offsets into the input line).
"""

from __future__ import annotations


class CoquatError(Exception):
    """Base class for all coquat errors."""


class NonFiniteValue(CoquatError):
    """A constructor received NaN or infinite components."""


class LightlikeNormalization(CoquatError):
    """Normalization requested for a lightlike quaternion (norm 0)."""


class LightlikeInverse(CoquatError):
    """Inversion requested for a lightlike quaternion (zero divisor)."""


class LightlikeNoPolarForm(CoquatError):
    """Polar decomposition requested for a lightlike quaternion."""


class NullVectorPart(CoquatError):
    """Timelike quaternion with a nonzero null vector part: no polar form."""


class InvalidAxis(CoquatError):
    """Polar-form axis fails the unit condition required by its kind."""


class NonUnitAxis(CoquatError):
    """Exponential axis is not unit timelike, unit spacelike, or null."""


class NotALeftRepresentation(CoquatError):
    """4x4 matrix does not have the left-representation structure."""


class NegativePowerOfLightlike(CoquatError):
    """Negative integer power of a lightlike quaternion (no inverse)."""


class OverflowedToInfinity(CoquatError):
    """A closed form overflowed double precision; no Inf values are emitted."""


class SeriesDidNotConverge(CoquatError):
    """Matrix exponential series hit max_terms before the tolerance."""


class ExprError(CoquatError):
    """Base class for expression-language errors; carries a source span."""

    def __init__(self, message: str, start: int, end: int):
        super().__init__(message)
        self.message = message
        self.start = start
        self.end = end


class LexError(ExprError):
    """Unexpected character while tokenizing."""


class ParseError(ExprError):
    """Token stream does not match the expression grammar."""

    def __init__(self, message: str, start: int, end: int, expected: tuple[str, ...] = ()):
        super().__init__(message, start, end)
        self.expected = expected


class EvalError(ExprError):
    """Evaluation failed; wraps the underlying library error when present."""

    def __init__(self, message: str, start: int, end: int, cause: Exception | None = None):
        super().__init__(message, start, end)
        self.cause = cause
