"""Utility functions for oddcolor-lab."""

from __future__ import annotations

from fractions import Fraction
from typing import cast

from .exceptions import InvalidParameterError, OddColorLabError
from .types import ErrorInfo


def format_error_response(error: Exception) -> ErrorInfo:
    """Format an error into a standard error response."""
    if isinstance(error, OddColorLabError):
        return cast(ErrorInfo, error.to_dict())
    return {
        "code": "INTERNAL_ERROR",
        "message": f"{type(error).__name__}: {error}",
    }


def fraction_to_str(value: Fraction | int) -> str:
    """Exact rational as ``p/q`` (or ``p`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str, parameter: str = "bound") -> Fraction:
    """Parse ``p``, ``p/q`` or a finite decimal into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidParameterError(
            parameter, f"{text!r} is not a rational number", expected_type="p/q"
        ) from None
