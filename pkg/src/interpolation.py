# src/interpolation.py

"""
Exact Newton forward-difference interpolation.

A polynomial sampled at consecutive integers t0, t0+1, ..., t0+N is

    p(t) = sum_j (Delta^j p)(t0) * C(t - t0, j)

so the forward differences at the first node are its coefficients in the
binomial basis. The multivariate version applies the one-dimensional table
along every axis of a box grid.
"""

import math
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from .arith import to_fraction, to_qq
from .vectors import Vector, box

BPoly = PolyElement

B_RING, B = ring("b", QQ)


def forward_differences(values: Sequence[Fraction]) -> List[Fraction]:
    """[Delta^0 f(t0), Delta^1 f(t0), ..., Delta^N f(t0)] for samples f(t0..t0+N)"""
    row = [Fraction(v) for v in values]
    head = []
    while row:
        head.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return head


def binomial_polynomial(variable: PolyElement, shift: int, j: int) -> PolyElement:
    """C(variable - shift, j) as a polynomial"""
    result = variable.ring.one
    for r in range(j):
        result *= variable - (shift + r)
    return result.quo_ground(QQ(math.factorial(j)))


def newton_bpoly(values: Sequence[Fraction], start: int = 0) -> BPoly:
    """Interpolate samples at b = start, start+1, ... by a BPoly"""
    result = B_RING.zero
    for j, delta in enumerate(forward_differences(values)):
        if delta:
            result += binomial_polynomial(B, start, j) * to_qq(delta)
    return result


def bpoly_degree(p: BPoly) -> int:
    return max((m[0] for m in p.keys()), default=-1)


def bpoly_leading_coefficient(p: BPoly) -> Fraction:
    if not p:
        return Fraction(0)
    return to_fraction(p.coeff(B ** bpoly_degree(p)))


def bpoly_evaluate(p: BPoly, b: int | Fraction) -> Fraction:
    b = Fraction(b)
    return sum((to_fraction(c) * b ** m[0] for m, c in p.items()), Fraction(0))


def bpoly_coefficients(p: BPoly) -> List[Fraction]:
    """Dense coefficient list, index = exponent of b"""
    coefficients = [Fraction(0)] * (bpoly_degree(p) + 1)
    for (e,), c in p.items():
        coefficients[e] = to_fraction(c)
    return coefficients


# ==================== MULTIVARIATE ====================


def grid_forward_differences(
    values: Mapping[Vector, Fraction], bound: Vector
) -> Dict[Vector, Fraction]:
    """
    Multivariate Newton coefficients D[j] = (Delta^j f)(0) for samples of f on
    the box 0 <= t <= bound, obtained axis by axis.
    """
    table: Dict[Vector, Fraction] = {t: Fraction(values[t]) for t in box(bound)}
    for axis, size in enumerate(bound):
        for t in list(table):
            if t[axis] != 0:
                continue
            line = [t[:axis] + (x,) + t[axis + 1 :] for x in range(size + 1)]
            head = forward_differences([table[point] for point in line])
            for point, value in zip(line, head):
                table[point] = value
    return {j: d for j, d in table.items() if d}


def binomial_basis_to_mpoly(
    coefficients: Mapping[Vector, Fraction], target: PolyRing
) -> PolyElement:
    """sum_j D[j] * prod_a C(x_a, j_a) in the ring `target` (one generator per axis)"""
    result = target.zero
    for j, delta in coefficients.items():
        term = target.one
        for generator, exponent in zip(target.gens, j):
            if exponent:
                term *= binomial_polynomial(generator, 0, exponent)
        result += term * to_qq(delta)
    return result
