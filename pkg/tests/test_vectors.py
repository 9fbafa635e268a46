# tests/test_vectors.py

import pytest

from src.vectors import (
    binomial,
    box,
    compositions,
    diagonal_positions,
    edge_count,
    edge_index,
    edge_pairs,
    vector_factorial,
    vector_gcd,
    vertex_count,
)


def test_edge_pairs_order():
    assert edge_pairs(2) == ((0, 0), (0, 1), (1, 1))
    assert edge_count(3) == len(edge_pairs(3)) == 6


def test_edge_index_is_symmetric():
    assert edge_index(3, 2, 0) == edge_index(3, 0, 2) == 2


def test_vertex_count():
    assert vertex_count(1) == 1
    assert vertex_count(6) == 3
    with pytest.raises(ValueError):
        vertex_count(4)


def test_diagonal_positions():
    assert diagonal_positions(2) == [0, 2]
    assert diagonal_positions(3) == [0, 3, 5]


def test_box_and_compositions():
    assert list(box((1, 1))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 0)) == [()]


def test_scalar_helpers():
    assert vector_factorial((2, 3)) == 12
    assert vector_gcd((4, 6)) == 2
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
