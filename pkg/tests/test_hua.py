# tests/test_hua.py

import pytest

from src.arith import Q, qpoly_terms, ratfunc_normalize
from src.hua import (
    Partition,
    b_lambda_inverse_factor,
    hua_H,
    hua_P_coefficients,
    kac_degree_bound,
    kac_derivative_at_1,
    kac_polynomial,
    mobius,
    pairing,
    partitions_of,
    partitions_up_to,
)
from src.state import Quiver


def test_partitions():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_up_to(3)) == 7
    assert Partition((3, 1)).transpose() == (2, 1, 1)
    assert Partition((2, 2, 1)).multiplicities() == {2: 2, 1: 1}
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        partitions_up_to(-1)


def test_pairing_and_b_factor():
    assert pairing(Partition((2,)), Partition((1, 1))) == 2
    assert b_lambda_inverse_factor(Partition((1,))) == ratfunc_normalize(Q**0, Q - 1)


def test_mobius():
    assert [mobius(d) for d in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]


def test_hua_H_for_one_loop():
    assert hua_H(Quiver.loops(1), (1,)) == ratfunc_normalize(Q, Q - 1)


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_dimension_one_gives_q_to_the_loops(g):
    assert kac_polynomial(Quiver.loops(g), (1,)) == Q**g


@pytest.mark.parametrize(
    "g, expected",
    [
        (1, [(1, 1)]),
        (2, [(5, 1), (3, 1)]),
        (3, [(9, 1), (7, 1), (5, 1)]),
        (4, [(13, 1), (11, 1), (9, 1), (7, 1)]),
    ],
)
def test_loop_quiver_dimension_two(g, expected):
    assert qpoly_terms(kac_polynomial(Quiver.loops(g), (2,))) == expected


@pytest.mark.parametrize(
    "alpha, g, expected",
    [(2, 3, 3), (3, 2, 6), (3, 3, 15), (4, 2, 22), (4, 4, 252)],
)
def test_values_at_1(alpha, g, expected):
    assert kac_derivative_at_1(Quiver.loops(g), (alpha,), 0) == expected


def test_first_derivative_at_1():
    assert kac_derivative_at_1(Quiver.loops(2), (2,), 1) == 8


def test_top_terms_for_dimension_three():
    terms = qpoly_terms(kac_polynomial(Quiver.loops(2), (3,)))
    assert terms[:3] == [(10, 1), (8, 1), (7, 1)]


def test_two_vertex_quivers():
    assert kac_polynomial(Quiver.kronecker(1), (1, 1)) == Q**0
    assert not kac_polynomial(Quiver.kronecker(1), (2, 2))
    assert kac_polynomial(Quiver.kronecker(2), (1, 1)) == Q + 1


def test_unit_vectors_count_loops():
    quiver = Quiver.from_multiplicities(2, (1, 3, 2))
    assert kac_polynomial(quiver, (1, 0)) == Q
    assert kac_polynomial(quiver, (0, 1)) == Q**2


def test_orientation_and_relabelling_do_not_matter():
    quiver = Quiver.from_multiplicities(2, (1, 2, 0))
    assert kac_polynomial(quiver, (1, 2)) == kac_polynomial(quiver.permuted((1, 0)), (2, 1))


def test_degree_law():
    assert kac_degree_bound(Quiver.loops(2), (2,)) == 5
    assert kac_degree_bound(Quiver.kronecker(2), (1, 1)) == 1


@pytest.mark.parametrize("alpha", [(0,), (1, 1), (-1,)])
def test_invalid_dimension_vectors(alpha):
    with pytest.raises(ValueError):
        kac_polynomial(Quiver.loops(1), alpha)


def test_generating_function_coefficients_fill_the_box():
    series = hua_P_coefficients(Quiver.loops(1), (2,))
    assert set(series.coeffs) == {(0,), (1,), (2,)}
    assert series.coeffs[(0,)] == 1
    with pytest.raises(ValueError):
        hua_P_coefficients(Quiver.loops(1), (0,))
