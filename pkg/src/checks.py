# src/checks.py

import logging
from typing import Any, Callable

from .errors import KacError
from .state import CheckResult

logger = logging.getLogger(__name__)


def _serialize(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def error_check(
    suite: str, name: str, expected: Any, error: KacError, boundary: bool = False
) -> CheckResult:
    """A failed check for an item whose computation raised"""
    logger.warning("%s/%s raised %s: %s", suite, name, type(error).__name__, error)
    return CheckResult(
        suite=suite,
        name=name,
        expected=_serialize(expected),
        actual="error",
        passed=False,
        boundary=boundary,
        detail=f"{type(error).__name__}: {error}",
    )


def run_check(
    suite: str,
    name: str,
    expected: Any,
    compute: Callable[[], Any],
    boundary: bool = False,
) -> CheckResult:
    """
    Run one verification item.

    Errors raised by the toolkit become a failed check carrying the message;
    anything else propagates.
    """
    try:
        actual = compute()
    except KacError as e:
        return error_check(suite, name, expected, e, boundary)
    passed = actual == expected
    if not passed:
        logger.info("%s/%s failed: expected %s, got %s", suite, name, expected, actual)
    return CheckResult(
        suite=suite,
        name=name,
        expected=_serialize(expected),
        actual=_serialize(actual),
        passed=passed,
        boundary=boundary,
    )
