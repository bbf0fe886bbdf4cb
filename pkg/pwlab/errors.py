"""
Exception hierarchy for pwlab.

Precondition failures also derive from ValueError so that callers can
catch them generically.
"""

from __future__ import annotations

from typing import Any, Optional


class PwlabError(Exception):
    """Base class for every error raised by pwlab."""


class ScheduleError(PwlabError, ValueError):
    """An epsilon schedule is invalid or was evaluated outside its range."""


class NoBreaksError(ScheduleError):
    """The envelope never decreases strictly, so no break plan exists."""


class SingularityError(PwlabError, ValueError):
    """A kernel was evaluated exactly at a non-removable singularity."""


class UnsupportedSignalError(PwlabError, ValueError):
    """A signal or spectrum does not satisfy the requirements of an operation."""


class QuadratureToleranceError(PwlabError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""


class NotFoundError(PwlabError, LookupError):
    """
    A search over a finite prefix found no qualifying index.

    Attributes:
        partial: Whatever was found before the search gave up (may be None)
    """

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class SubsequenceNotFoundError(NotFoundError):
    """No index of the sequence falls into the requested window."""


class ConfigError(PwlabError, ValueError):
    """
    Experiment configuration failed validation.

    Attributes:
        field: Name of the offending configuration field
    """

    def __init__(self, message: str, field: Optional[str] = None):
        if field:
            message = f"{field}: {message}"
        super().__init__(message)
        self.field = field


class EmptyConstructionError(ConfigError):
    """The configured adversarial construction has no terms."""


class ReportIOError(PwlabError, OSError):
    """Writing a report failed; carries the target path."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"cannot write report to {path}: {reason}")
        self.path = path
