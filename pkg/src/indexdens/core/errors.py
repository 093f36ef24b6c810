"""
Exception hierarchy.

Errors caused by bad input also derive from ValueError so callers that
catch ValueError keep working.
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from indexdens.validation.report import ValidationReport


class IndexDensError(Exception):
    """Base class for every error raised by indexdens."""


class PreconditionError(IndexDensError, ValueError):
    """An argument lies outside the domain of the operation."""


class ValidityConditionError(PreconditionError):
    """The (rank, n_terms) pair violates the accelerated product's validity condition."""


class ModulusMismatchError(IndexDensError, ValueError):
    """Two characters with different moduli were combined."""


class SelectorError(IndexDensError, ValueError):
    """A character selector matched no character or more than one."""


class GeneratorParseError(IndexDensError, ValueError):
    """A field element could not be parsed."""


class InconsistentModelError(IndexDensError, ValueError):
    """A DegreeModel violates one of its consistency rules."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None) -> None:
        super().__init__(message)
        self.report = report


class ImaginaryResidualError(IndexDensError, ArithmeticError):
    """A density came out with an imaginary part above tolerance."""


class FactorizationError(IndexDensError, ArithmeticError):
    """An integer could not be factored completely."""
