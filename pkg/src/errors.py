# src/errors.py

"""
Exception hierarchy for the Kac polynomial toolkit.

Input problems subclass the matching builtin (ValueError, ZeroDivisionError)
and map to CLI exit code 2. Broken mathematical guarantees subclass
InternalAssertionError and map to exit code 3.
"""

from typing import Optional


class KacError(Exception):
    """Base class for every error raised by this package"""


# ==================== INPUT ERRORS ====================


class SpecParseError(KacError, ValueError):
    """A quiver specification could not be parsed or validated"""

    def __init__(
        self, message: str, line: Optional[int] = None, field: Optional[str] = None
    ):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


class InstanceTooLargeError(KacError, ValueError):
    """An enumeration oracle was asked for more than its guard allows"""


class InvalidIndexError(KacError, ValueError):
    """An index lies outside the set an operation is defined on"""


class NonUnitalSeriesError(KacError, ValueError):
    """series_log called on a series whose constant term is not 1"""


class InvalidConstructionError(KacError, ZeroDivisionError):
    """A rational function was built with a zero denominator"""


# ==================== INTERNAL ASSERTIONS ====================


class InternalAssertionError(KacError, ArithmeticError):
    """A result contradicts a theorem the computation relies on"""


class IntegralityError(InternalAssertionError):
    """A value that must lie in Z[q] (or Z) does not"""


class OrderMismatchError(InternalAssertionError):
    """A pole or zero at q = 1 has the wrong order"""

    def __init__(self, message: str, actual_order: Optional[int] = None):
        self.actual_order = actual_order
        super().__init__(message)


class ReconstructionError(InternalAssertionError):
    """A Mahler expansion does not reproduce the function it was built from"""


class DegreeCapError(InternalAssertionError):
    """Higher finite differences do not vanish: degree cap too small"""


# ==================== EXIT CODES ====================

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit status"""
    if isinstance(error, InternalAssertionError):
        return EXIT_INTERNAL_ERROR
    if isinstance(error, (ValueError, ZeroDivisionError)):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR
