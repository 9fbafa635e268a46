# tests/test_leading.py

from fractions import Fraction

import pytest

from src.arith import mpoly_terms
from src.errors import InvalidIndexError
from src.leading import (
    c_coefficient,
    check_intermediate_coefficients,
    fit_agrees_with_leading,
    fit_binomial_row_at_q1,
    fit_polynomial_in_g,
    in_s_k,
    leading_component,
    leading_component_at_q1,
    limit_polynomial,
    s_k_set,
    single_vertex_leading_coefficient,
    top_homogeneous_part,
)
from src.state import LeadingComponent


def test_s_k_set_varies_only_loop_entries():
    assert sorted(s_k_set((1, 2, 1))) == [(0, 2, 0), (0, 2, 1), (1, 2, 0), (1, 2, 1)]
    assert in_s_k((1, 2, 1), (0, 2, 1))
    assert not in_s_k((1, 2, 1), (1, 1, 1))


def test_c_coefficient():
    assert c_coefficient((1, 1), (0, 1, 0), (0, 1, 0)) == 1
    assert c_coefficient((2,), (2,), (1,)) == 5
    with pytest.raises(InvalidIndexError):
        c_coefficient((2,), (1,), (2,))


@pytest.mark.parametrize(
    "alpha, s, expected",
    [
        (1, 0, {(0,): Fraction(1)}),
        (2, 0, {(1,): Fraction(1)}),
        (2, 1, {(2,): Fraction(3)}),
        (3, 0, {(2,): Fraction(2)}),
        (4, 0, {(3,): Fraction(16, 3)}),
        (5, 0, {(4,): Fraction(50, 3)}),
    ],
)
def test_single_vertex_leading_components(alpha, s, expected):
    assert leading_component(1, (alpha,), s).terms == expected


def test_leading_component_degree_is_checked():
    with pytest.raises(ValueError):
        LeadingComponent(alpha=(2,), s=0, terms={(2,): Fraction(1)})


@pytest.mark.parametrize("n, alpha", [(1, (3,)), (1, (4,)), (2, (1, 1)), (2, (2, 1))])
def test_graph_form_at_s_zero(n, alpha):
    assert leading_component_at_q1(n, alpha).terms == leading_component(n, alpha, 0).terms


@pytest.mark.parametrize("alpha, s", [(2, 1), (3, 1), (3, 2)])
def test_single_vertex_closed_form(alpha, s):
    leading = leading_component(1, (alpha,), s)
    assert leading.terms[(s + alpha - 1,)] == single_vertex_leading_coefficient(alpha, s)


def test_fit_of_first_derivative():
    fit = fit_polynomial_in_g(1, (2,), 1, 2)
    assert fit.terms == {(2,): 3, (1,): -2}
    assert fit.evaluate((5,)) == 65
    assert top_homogeneous_part(fit) == {(2,): 3}
    assert fit_agrees_with_leading(fit, leading_component(1, (2,), 1))


def test_fit_on_two_vertices():
    fit = fit_polynomial_in_g(2, (1, 1), 0, 1)
    assert fit.terms == {(0, 1, 0): 1}
    assert fit_agrees_with_leading(fit, leading_component(2, (1, 1), 0))


def test_fit_rejects_low_cap():
    with pytest.raises(ValueError):
        fit_polynomial_in_g(1, (2,), 1, 1)


def test_binomial_rows():
    assert fit_binomial_row_at_q1(2) == [1, 0]
    assert fit_binomial_row_at_q1(3) == [4, 1, 0]
    assert fit_binomial_row_at_q1(4) == [32, 20, 1, 0]


def test_limit_polynomial_and_intermediate_coefficients():
    assert mpoly_terms(limit_polynomial((1,))) == {(0,): 1, (1,): 1}
    assert check_intermediate_coefficients((2,))
    assert check_intermediate_coefficients((1, 1))
