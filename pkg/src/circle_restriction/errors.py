"""
Exception hierarchy for circle-restriction.

Library code raises these; command functions catch them and wrap the message
into a ``CommandResponse``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from circle_restriction.oscint.models import CertifiedValue


class CircleRestrictionError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CircleRestrictionError, ValueError):
    """Argument is malformed (non-finite, wrong sign, wrong length)."""


class DomainError(CircleRestrictionError, ValueError):
    """Argument lies outside the support of the function being evaluated."""


class NearSingularityError(DomainError):
    """Argument is too close to a singular point to evaluate reliably."""


class PreconditionError(CircleRestrictionError, ValueError):
    """A structural precondition on a TrigPoly (parity, sign, mean) fails."""


class RefusedError(CircleRestrictionError, ValueError):
    """Input is admissible in principle but too large to evaluate accurately."""


class AccuracyNotAchievedError(CircleRestrictionError, RuntimeError):
    """
    Requested accuracy could not be reached.

    Attributes:
        best: Best certified value obtained before giving up (may be None)
    """

    def __init__(self, message: str, best: Optional["CertifiedValue"] = None):
        super().__init__(message)
        self.best = best


class CoefficientParseError(CircleRestrictionError, ValueError):
    """Malformed coefficient file line."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
