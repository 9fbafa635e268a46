# tests/test_mahler.py

import pytest

from src.arith import Q
from src.errors import InvalidIndexError
from src.hua import kac_polynomial
from src.mahler import (
    _spot_points,
    angle_binomial_matches_qbinom,
    check_coefficient_derivative,
    coefficient_derivative_values,
    default_box,
    is_boundary_case,
    mahler_binomial_coefficients_at_1,
    mahler_table,
    qbinom_product,
    qdifference_coefficient,
    reconstruct,
    vanishes_at_1,
)
from src.qcomb import qbinom
from src.state import Quiver


@pytest.mark.parametrize("b, ell", [(4, 2), (1, 3), (0, 0), (3, 3)])
def test_angle_binomial_of_q_power(b, ell):
    assert angle_binomial_matches_qbinom(b, ell)


def test_qbinom_product():
    assert qbinom_product((3, 2), (1, 1)) == qbinom(3, 1) * qbinom(2, 1)
    assert not qbinom_product((1, 2), (2, 0))


def test_qdifference_of_q_power():
    def power(g):
        return Q ** g[0]

    assert qdifference_coefficient(power, (0,)) == 1
    assert qdifference_coefficient(power, (1,)) == Q - 1
    assert not qdifference_coefficient(power, (2,))


def test_table_for_dimension_one():
    table = mahler_table(1, (1,))
    assert table.box == default_box(1, (1,)) == (3,)
    assert table.extensions == 0
    assert dict(table.coeffs) == {(0,): 1, (1,): Q - 1}


def test_table_reconstructs_outside_the_box():
    table = mahler_table(1, (2,))
    assert reconstruct(table, (6,)) == kac_polynomial(Quiver.loops(6), (2,))
    assert vanishes_at_1(table)


def test_table_is_independent_of_thread_count():
    assert mahler_table(1, (2,), threads=1).coeffs == mahler_table(1, (2,), threads=3).coeffs


def test_table_rejects_wrong_box_length():
    with pytest.raises(ValueError):
        mahler_table(2, (1, 1), (3,))


def test_binomial_coefficients_at_1():
    assert mahler_binomial_coefficients_at_1(1, (2,)) == {(1,): 1}
    assert mahler_binomial_coefficients_at_1(1, (3,)) == {(1,): 1, (2,): 4}


@pytest.mark.parametrize("k, expected", [((2,), 5), ((3,), 12)])
def test_coefficient_derivative(k, expected):
    assert coefficient_derivative_values(1, (2,), k) == (expected, expected)


def test_coefficient_derivative_domain():
    with pytest.raises(InvalidIndexError):
        coefficient_derivative_values(1, (2,), (1,))
    assert is_boundary_case((2,), (2,))
    assert not is_boundary_case((2,), (3,))


def test_coefficient_derivative_law_above_the_boundary():
    assert check_coefficient_derivative(1, (2,), (3,))


def test_zero_box_grows_until_the_expansion_fits():
    table = mahler_table(1, (1,), (0,))
    assert table.extensions == 1
    assert table.box == (1,)
    assert reconstruct(table, (5,)) == Q**5


def test_zero_loop_entries_grow_too():
    table = mahler_table(2, (1, 1), (0, 2, 0))
    assert table.extensions >= 1
    assert min(table.box) >= 1
    g = (2, 3, 1)
    assert reconstruct(table, g) == kac_polynomial(Quiver.from_multiplicities(2, g), (1, 1))


def test_negative_box_is_rejected():
    with pytest.raises(InvalidIndexError):
        mahler_table(1, (1,), (-1,))


def test_spot_points_leave_the_box_one_axis_at_a_time():
    points = _spot_points((2, 3, 1), 2)
    assert (3, 4, 2) in points and (4, 5, 3) in points
    assert {(3, 3, 1), (2, 4, 1), (2, 3, 2)} <= set(points)
