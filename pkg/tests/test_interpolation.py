# tests/test_interpolation.py

from fractions import Fraction

from src.arith import mpoly_ring
from src.interpolation import (
    B,
    binomial_basis_to_mpoly,
    bpoly_coefficients,
    bpoly_degree,
    bpoly_evaluate,
    bpoly_leading_coefficient,
    forward_differences,
    grid_forward_differences,
    newton_bpoly,
)
from src.vectors import box


def test_forward_differences():
    assert forward_differences([1, 8, 21, 40]) == [1, 7, 6, 0]


def test_newton_interpolation_recovers_square():
    p = newton_bpoly([0, 1, 4, 9])
    assert p == B**2
    assert bpoly_degree(p) == 2
    assert bpoly_leading_coefficient(p) == 1
    assert bpoly_evaluate(p, 5) == 25


def test_newton_interpolation_with_shifted_start():
    p = newton_bpoly([Fraction(1, 2), Fraction(1), Fraction(3, 2)], start=1)
    assert bpoly_coefficients(p) == [0, Fraction(1, 2)]


def test_grid_differences_of_product():
    values = {t: t[0] * t[1] for t in box((2, 2))}
    assert grid_forward_differences(values, (2, 2)) == {(1, 1): 1}


def test_binomial_basis_to_monomials():
    R = mpoly_ring(("x", "y"))
    x, y = R.gens
    assert binomial_basis_to_mpoly({(1, 1): Fraction(1)}, R) == x * y
    assert binomial_basis_to_mpoly({(2, 0): Fraction(2), (0, 0): Fraction(1)}, R) == x**2 - x + 1
