# tests/test_arith.py

from fractions import Fraction

import pytest

from src.arith import (
    Q,
    TruncSeries,
    fraction_to_int,
    mpoly_ring,
    mpoly_terms,
    mpoly_truncate,
    qpoly,
    qpoly_coefficients,
    qpoly_degree,
    qpoly_evaluate,
    qpoly_taylor_at_1,
    qpoly_terms,
    ratfunc,
    ratfunc_as_qpoly,
    ratfunc_evaluate,
    ratfunc_limit_with_pole_cancellation,
    ratfunc_normalize,
    series_exp,
    series_log,
    taylor_coefficients_at_1,
    taylor_shift,
    vanishing_order_at_1,
)
from src.errors import (
    IntegralityError,
    InvalidConstructionError,
    NonUnitalSeriesError,
    OrderMismatchError,
)


def test_qpoly_basics():
    p = Q**5 + Q**3
    assert qpoly_degree(p) == 5
    assert qpoly_degree(qpoly([])) == -1
    assert qpoly_terms(p) == [(5, 1), (3, 1)]
    assert qpoly_evaluate(p, 2) == 40
    assert qpoly([0, 1, 1]) == Q + Q**2


def test_derivatives_at_1():
    p = Q**5 + Q**3
    assert qpoly_taylor_at_1(p, 0) == 2
    assert qpoly_taylor_at_1(p, 1) == 8
    assert qpoly_taylor_at_1(p, 2) == 26
    with pytest.raises(ValueError):
        qpoly_taylor_at_1(p, -1)


def test_taylor_shift_and_vanishing_order():
    assert taylor_shift(Q**2) == [1, 2, 1]
    assert vanishing_order_at_1(Q * (Q - 1) ** 2) == 2
    assert vanishing_order_at_1(qpoly([])) == -1


def test_taylor_coefficients_of_rational_function():
    f = ratfunc_normalize(qpoly([1]), Q + 1)
    assert taylor_coefficients_at_1(f, 2) == [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)]


def test_pole_at_1_is_reported():
    with pytest.raises(OrderMismatchError) as info:
        taylor_coefficients_at_1(ratfunc_normalize(qpoly([1]), Q - 1), 1)
    assert info.value.actual_order == 1


def test_ratfunc_canonical_form():
    f = ratfunc_normalize(Q**2 - 1, Q - 1)
    assert ratfunc_as_qpoly(f) == Q + 1
    with pytest.raises(InvalidConstructionError):
        ratfunc_normalize(Q, qpoly([]))
    with pytest.raises(IntegralityError):
        ratfunc_as_qpoly(ratfunc_normalize(qpoly([1]), Q))


def test_pole_cancellation():
    f = ratfunc_normalize(Q**2, Q - 1)
    assert ratfunc_limit_with_pole_cancellation(f, 1) == 1
    with pytest.raises(OrderMismatchError):
        ratfunc_limit_with_pole_cancellation(f, 0)


def test_fraction_to_int():
    assert fraction_to_int(Fraction(6, 2)) == 3
    with pytest.raises(IntegralityError):
        fraction_to_int(Fraction(3, 2), "half")


def test_series_exp_and_log():
    x = TruncSeries((4,), {(1,): Fraction(1)}, Fraction(1))
    e = series_exp(x)
    assert e.coefficient((3,)) == Fraction(1, 6)
    assert series_log(e) == x


def test_series_log_needs_unit_constant_term():
    with pytest.raises(NonUnitalSeriesError):
        series_log(TruncSeries((2,), {(0,): Fraction(2)}, Fraction(1)))


def test_series_drops_out_of_box_terms():
    s = TruncSeries((1, 1), {(2, 0): Fraction(1), (1, 1): Fraction(3)}, Fraction(1))
    assert dict(s.coeffs) == {(1, 1): Fraction(3)}


def test_mpoly_truncate():
    R = mpoly_ring(("x", "y"))
    x, y = R.gens
    p = mpoly_truncate((1 + x + y) ** 2, 1)
    assert mpoly_terms(p) == {(0, 0): 1, (1, 0): 2, (0, 1): 2}


def test_dense_coefficients_and_polynomial_quotient():
    assert qpoly_coefficients(Q**2 + 2) == [2, 0, 1]
    assert ratfunc_as_qpoly(ratfunc(Q**2 - 1) / ratfunc(Q - 1)) == Q + 1
    assert ratfunc_as_qpoly(ratfunc(3)) == 3


def test_pole_cancellation_of_hua_denominator():
    # (q-1)^2 / b_(1,1)(1/q) with b_(1,1)(1/q) = (q-1)(q^2-1)/q^3
    f = ratfunc_normalize((Q - 1) ** 2 * Q**3, (Q - 1) * (Q**2 - 1))
    assert ratfunc_limit_with_pole_cancellation(f, 0) == Fraction(1, 2)


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4), 2, 0])
def test_normalized_ratfunc_evaluates_like_the_quotient(x):
    num = (Q**2 - 1) * (Q + 3)
    den = (Q - 1) * (2 * Q + 5)
    f = ratfunc_normalize(num, den)
    assert ratfunc_evaluate(f, x) == qpoly_evaluate(num, x) / qpoly_evaluate(den, x)


def test_series_log_of_product_is_sum_of_logs():
    bound = (3, 2)
    one = Fraction(1)
    a = TruncSeries(
        bound,
        {(0, 0): one, (1, 0): Fraction(2), (0, 1): Fraction(-1, 3), (1, 1): Fraction(5)},
        one,
    )
    b = TruncSeries(bound, {(0, 0): one, (2, 1): Fraction(1, 2), (0, 2): Fraction(3)}, one)
    assert series_log(a * b) == series_log(a) + series_log(b)
