# tests/test_errors.py

import pytest

from src.errors import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    DegreeCapError,
    InstanceTooLargeError,
    IntegralityError,
    InvalidConstructionError,
    OrderMismatchError,
    SpecParseError,
    exit_code_for,
)


def test_spec_parse_error_location():
    error = SpecParseError("must be >= 0", line=4, field="edges[1].multiplicity")
    assert str(error) == "[line 4, field 'edges[1].multiplicity'] must be >= 0"
    assert str(SpecParseError("bad")) == "bad"


def test_order_mismatch_keeps_order():
    assert OrderMismatchError("x", actual_order=2).actual_order == 2


@pytest.mark.parametrize(
    "error, code",
    [
        (SpecParseError("x"), EXIT_INPUT_ERROR),
        (InstanceTooLargeError("x"), EXIT_INPUT_ERROR),
        (InvalidConstructionError("x"), EXIT_INPUT_ERROR),
        (ValueError("x"), EXIT_INPUT_ERROR),
        (IntegralityError("x"), EXIT_INTERNAL_ERROR),
        (DegreeCapError("x"), EXIT_INTERNAL_ERROR),
        (RuntimeError("x"), EXIT_INTERNAL_ERROR),
    ],
)
def test_exit_codes(error, code):
    assert exit_code_for(error) == code
