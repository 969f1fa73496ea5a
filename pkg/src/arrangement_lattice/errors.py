"""Exceptions raised by the arrangement-lattice pipeline.

All errors derive from ``ArrangementLatticeError``, itself a ``ValueError``,
so callers that already catch ``ValueError`` keep working.
"""

from __future__ import annotations


class ArrangementLatticeError(ValueError):
    """Base class for every error raised by this package."""


class DegeneratePairError(ArrangementLatticeError):
    """Two identical lines were passed where distinct lines are required."""

    def __init__(self, message: str = "degenerate pair: the two lines coincide") -> None:
        super().__init__(message)


class NotNodalError(ArrangementLatticeError):
    """The arrangement has a triple point or a repeated line."""


class ConditionViolationError(ArrangementLatticeError):
    """A parallel class has three or more lines, so lattice predictions do not apply."""


class ArrangementParseError(ArrangementLatticeError):
    """An arrangement file could not be parsed.

    Attributes:
        line: 1-based line number in the input text (0 when not tied to a line)
        column: 1-based column of the offending token (0 when unknown)
        token: The offending token, if any
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, token: str | None = None) -> None:
        self.line = line
        self.column = column
        self.token = token
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")


class CoherenceUndefinedError(ArrangementLatticeError):
    """Coherence was asked for a chamber pair that does not meet at a single vertex."""

    def __init__(self, message: str = "coherence undefined: chambers do not meet at a single vertex") -> None:
        super().__init__(message)


class SingularFormError(ArrangementLatticeError):
    """A non-degenerate form was required but the Gram matrix is singular."""


class GenerationError(ArrangementLatticeError):
    """The random generator ran out of retries."""


class CrossCheckError(ArrangementLatticeError):
    """A computed invariant contradicts a closed-form prediction or an internal self-check."""
