# src/qcomb.py

"""
Stirling numbers of the second kind, Gaussian binomials and the polynomials
in b describing their q-derivatives at q = 1.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List

from .arith import (
    QPoly,
    Q_RING,
    TruncSeries,
    geometric_sum,
    qpoly_taylor_at_1,
    ratfunc_normalize,
    taylor_coefficients_at_1,
    taylor_shift,
)
from .errors import InternalAssertionError
from .interpolation import (
    BPoly,
    bpoly_degree,
    bpoly_evaluate,
    bpoly_leading_coefficient,
    newton_bpoly,
)

logger = logging.getLogger(__name__)


# ==================== STIRLING NUMBERS ====================


@lru_cache(maxsize=None)
def stirling2(ell: int, k: int) -> int:
    """S(l, k), partitions of an l-set into k blocks"""
    if ell < 0 or k < 0:
        raise ValueError(f"Stirling arguments must be >= 0, got ({ell}, {k})")
    if ell == 0 or k == 0:
        return 1 if ell == k else 0
    return k * stirling2(ell - 1, k) + stirling2(ell - 1, k - 1)


def stirling_egf_check(k: int, order: int = 10) -> bool:
    """sum_l S(l, k) x^l / l! == (e^x - 1)^k / k! through x^order"""
    bound = (order,)
    one = Fraction(1)
    exp_minus_one = TruncSeries(
        bound, {(m,): Fraction(1, math.factorial(m)) for m in range(1, order + 1)}, one
    )
    power = TruncSeries.constant(bound, one)
    for _ in range(k):
        power = power * exp_minus_one
    expected = power.scale(1, math.factorial(k))
    stirling_side = TruncSeries(
        bound,
        {(m,): Fraction(stirling2(m, k), math.factorial(m)) for m in range(order + 1)},
        one,
    )
    return stirling_side == expected


# ==================== GAUSSIAN BINOMIALS ====================


@lru_cache(maxsize=None)
def qbinom(b: int, k: int) -> QPoly:
    """[b choose k]_q = prod_{i=1..k} [b-i+1]_q / [i]_q, zero when k > b"""
    if b < 0 or k < 0:
        raise ValueError(f"q-binomial arguments must be >= 0, got ({b}, {k})")
    if k > b:
        return Q_RING.zero
    numerator = Q_RING.one
    denominator = Q_RING.one
    for i in range(1, k + 1):
        numerator *= geometric_sum(b - i + 1)
        denominator *= geometric_sum(i)
    return numerator.exquo(denominator)


@lru_cache(maxsize=None)
def qbinom_derivative_poly(k: int, t: int) -> BPoly:
    """
    P_{k,t}(b) = d^t/dq^t [b choose k]_q at q = 1, a polynomial in b of
    degree k + t with leading coefficient t!/(k+t)! S(k+t, k).
    """
    nodes = range(k + t + 1)
    values = [qpoly_taylor_at_1(qbinom(b, k), t) for b in nodes]
    poly = newton_bpoly(values, start=0)
    expected = Fraction(math.factorial(t) * stirling2(k + t, k), math.factorial(k + t))
    if bpoly_leading_coefficient(poly) != expected or (
        expected and bpoly_degree(poly) != k + t
    ):
        raise InternalAssertionError(
            f"P_({k},{t}) has leading coefficient {bpoly_leading_coefficient(poly)} "
            f"in degree {bpoly_degree(poly)}, expected {expected} in degree {k + t}"
        )
    return poly


def _ratio_derivative_value(i: int, m: int, b: int) -> Fraction:
    ratio = ratfunc_normalize(geometric_sum(b - i + 1), geometric_sum(i))
    return math.factorial(m) * taylor_coefficients_at_1(ratio, m)[m]


@lru_cache(maxsize=None)
def ratio_derivative_poly(i: int, m: int) -> BPoly:
    """
    p_{i,m}(b) = d^m/dq^m of (1 + ... + q^(b-i)) / (1 + ... + q^(i-1)) at q = 1,
    for b >= i - 1. Degree m + 1, leading coefficient 1/(i(m+1)).
    """
    if i < 1 or m < 0:
        raise ValueError(f"ratio_derivative_poly needs i >= 1 and m >= 0, got ({i}, {m})")
    nodes = range(i - 1, i + m + 1)
    poly = newton_bpoly([_ratio_derivative_value(i, m, b) for b in nodes], start=i - 1)
    expected = Fraction(1, i * (m + 1))
    if bpoly_degree(poly) != m + 1 or bpoly_leading_coefficient(poly) != expected:
        raise InternalAssertionError(
            f"p_({i},{m}) has degree {bpoly_degree(poly)} and leading coefficient "
            f"{bpoly_leading_coefficient(poly)}, expected {m + 1} and {expected}"
        )
    if bpoly_evaluate(poly, i - 1) != 0:
        raise InternalAssertionError(f"p_({i},{m}) does not vanish at b = {i - 1}")
    return poly


def qbinom_taylor_product_check(b: int, k: int, order: int) -> bool:
    """
    The (q-1)-Taylor coefficients of [b choose k]_q equal the Cauchy product
    over i = 1..k of the strings p_{i,m}(b)/m!, m = 0..order.
    """
    product: List[Fraction] = [Fraction(1)] + [Fraction(0)] * order
    for i in range(1, k + 1):
        if b < i - 1:
            factor = [Fraction(0)] * (order + 1)
        else:
            factor = [
                bpoly_evaluate(ratio_derivative_poly(i, m), b) / math.factorial(m)
                for m in range(order + 1)
            ]
        product = [
            sum(product[a] * factor[t - a] for a in range(t + 1)) for t in range(order + 1)
        ]
    direct = taylor_shift(qbinom(b, k)) + [Fraction(0)] * (order + 1)
    return product == direct[: order + 1]
