# src/mahler.py

"""
Expansion of A(alpha, q), as a function of the edge multiplicities, in the
q-binomial basis:

    A(alpha, q) = sum_k a(alpha, k, q) prod_{i<=j} [g_ij choose k_ij]_q

The coefficients come from q-differences of evaluations on the integer grid:

    c_l(q) = sum_{0<=j<=l} prod_a [l_a choose j_a]_q (-1)^j_a q^(j_a(j_a-1)/2) f(l - j)
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from langsmith import traceable

from .arith import (
    Q,
    Q_FIELD,
    Q_RING,
    QPoly,
    RatFunc,
    qpoly_evaluate,
    qpoly_is_integral,
    ratfunc_normalize,
    taylor_shift,
)
from .config import MAHLER_MAX_EXTENSIONS, MAHLER_S_MAX, MAHLER_SPOT_CHECKS
from .errors import IntegralityError, InvalidIndexError, OrderMismatchError, ReconstructionError
from .graph_counts import connected_counts
from .hua import kac_polynomial
from .leading import c_coefficient, s_k_set
from .qcomb import qbinom
from .state import MahlerTable, Quiver
from .vectors import Vector, box, compositions, edge_count, leq, norm, sub, vector_factorial

logger = logging.getLogger(__name__)

GridFunction = Callable[[Vector], QPoly]


def angle_binomial(x: RatFunc, ell: int) -> RatFunc:
    """<x choose l> = prod_{i=1..l} (x/q^(i-1) - 1)/(q^i - 1)"""
    result = Q_FIELD.one
    for i in range(1, ell + 1):
        result *= (x * ratfunc_normalize(Q_RING.one, Q ** (i - 1)) - 1) * ratfunc_normalize(
            Q_RING.one, Q**i - 1
        )
    return result


def qbinom_product(g: Vector, k: Vector) -> QPoly:
    """prod [g_a choose k_a]_q"""
    result = Q_RING.one
    for b, c in zip(g, k):
        result *= qbinom(b, c)
        if not result:
            break
    return result


def _difference_weight(ell: Vector, j: Vector) -> QPoly:
    weight = Q_RING.one
    for la, ja in zip(ell, j):
        weight *= qbinom(la, ja) * Q ** (ja * (ja - 1) // 2) * (-1) ** ja
    return weight


def qdifference_coefficient(evaluate: GridFunction, ell: Vector) -> QPoly:
    """c_l(q) from the values of `evaluate` on 0 <= b <= l; asserted to lie in Z[q]"""
    ell = tuple(ell)
    result = Q_RING.zero
    for j in box(ell):
        result += _difference_weight(ell, j) * evaluate(sub(ell, j))
    if not qpoly_is_integral(result):
        raise IntegralityError(f"q-difference coefficient at {ell} is not in Z[q]: {result}")
    return result


class _KacGrid:
    """Memoized g -> A(alpha, q) for quivers with n vertices"""

    def __init__(self, n: int, alpha: Vector, threads: int = 1):
        self.n = n
        self.alpha = tuple(alpha)
        self.threads = threads
        self.values: Dict[Vector, QPoly] = {}

    def __call__(self, g: Vector) -> QPoly:
        g = tuple(g)
        if g not in self.values:
            self.values[g] = kac_polynomial(Quiver.from_multiplicities(self.n, g), self.alpha)
        return self.values[g]

    def prefetch(self, points) -> None:
        missing = [g for g in points if g not in self.values]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            for g, value in zip(
                missing,
                executor.map(
                    lambda g: kac_polynomial(Quiver.from_multiplicities(self.n, g), self.alpha),
                    missing,
                ),
            ):
                self.values[g] = value


def default_box(n: int, alpha: Vector, s_max: int = MAHLER_S_MAX) -> Vector:
    return (norm(alpha) + s_max,) * edge_count(n)


def _reconstruct(coeffs: Dict[Vector, QPoly], g: Vector) -> QPoly:
    return sum(
        (a * qbinom_product(g, k) for k, a in coeffs.items() if leq(k, g)), Q_RING.zero
    )


def _spot_points(bound: Vector, count: int) -> list:
    """Diagonal points past the box, then one point past each face"""
    points = [tuple(b + 1 + t for b in bound) for t in range(count)]
    for axis in range(len(bound)):
        point = list(bound)
        point[axis] += 1
        points.append(tuple(point))
    return list(dict.fromkeys(points))


@traceable(name="mahler_table")
def mahler_table(
    n: int, alpha: Vector, bound: Optional[Vector] = None, threads: int = 1
) -> MahlerTable:
    """
    a(alpha, k, q) for all k <= bound. The expansion is checked on every grid
    point and on out-of-box spot checks; the box is doubled when a spot
    check fails, at most MAHLER_MAX_EXTENSIONS times.
    """
    alpha = tuple(alpha)
    bound = tuple(bound) if bound is not None else default_box(n, alpha)
    if len(bound) != edge_count(n):
        raise ValueError(f"Box {bound} must have {edge_count(n)} entries for n={n}")
    if any(b < 0 for b in bound):
        raise InvalidIndexError(f"Box entries must be >= 0, got {bound}")
    grid = _KacGrid(n, alpha, threads)
    for extension in range(MAHLER_MAX_EXTENSIONS + 1):
        grid.prefetch(list(box(bound)))
        coeffs = {}
        for k in box(bound):
            a = qdifference_coefficient(grid, k)
            if a:
                coeffs[k] = a
        for g in box(bound):
            if _reconstruct(coeffs, g) != grid(g):
                raise ReconstructionError(f"Mahler expansion fails on grid point {g} for alpha={alpha}")
        spots = _spot_points(bound, MAHLER_SPOT_CHECKS)
        grid.prefetch(spots)
        failed = [g for g in spots if _reconstruct(coeffs, g) != grid(g)]
        if not failed:
            return MahlerTable(n=n, alpha=alpha, box=bound, coeffs=coeffs, extensions=extension)
        logger.warning(
            "Mahler box %s too small for alpha=%s (spot check %s failed), doubling",
            bound, alpha, failed[0],
        )
        bound = tuple(max(2 * b, 1) for b in bound)
    raise ReconstructionError(
        f"Mahler expansion for alpha={alpha} still fails after {MAHLER_MAX_EXTENSIONS} box doublings"
    )


def reconstruct(table: MahlerTable, g: Vector) -> QPoly:
    """sum_k a(alpha, k, q) prod [g_ij choose k_ij]_q"""
    return _reconstruct(dict(table.coeffs), tuple(g))


def mahler_binomial_coefficients_at_1(
    n: int, alpha: Vector, threads: int = 1
) -> Dict[Vector, int]:
    """
    a(alpha, k, 1) for |k| <= |alpha| - 1, the coefficients of A(alpha, 1) in the
    basis prod C(g_ij, k_ij). Higher |k| vanish at q = 1.
    """
    alpha = tuple(alpha)
    grid = _KacGrid(n, alpha, threads)
    result = {}
    for total in range(norm(alpha)):
        for k in compositions(total, edge_count(n)):
            grid.prefetch(list(box(k)))
            value = qpoly_evaluate(qdifference_coefficient(grid, k), 1)
            if value:
                result[k] = int(value)
    return result


# ==================== COEFFICIENT DERIVATIVE ====================


def coefficient_derivative_values(n: int, alpha: Vector, k: Vector) -> Tuple[Fraction, Fraction]:
    """
    (a(alpha, k, q)/(q-1)^e at q = 1, (k!/alpha!) sum_{p in S_k} c^alpha_{kp} G_p^alpha)
    with e = |k| - |alpha| + 1. Raises OrderMismatchError if (q-1)^e does not divide a.
    """
    alpha, k = tuple(alpha), tuple(k)
    if norm(k) < norm(alpha):
        raise InvalidIndexError(f"|k| = {norm(k)} must be >= |alpha| = {norm(alpha)}")
    order = norm(k) - norm(alpha) + 1
    a = qdifference_coefficient(_KacGrid(n, alpha), k)
    shifted = taylor_shift(a) + [Fraction(0)] * (order + 1)
    for t in range(order):
        if shifted[t]:
            raise OrderMismatchError(
                f"a(alpha={alpha}, k={k}, q) vanishes to order {t} at q = 1, expected {order}",
                actual_order=t,
            )
    counts = connected_counts(alpha, norm(k))
    graph_sum = sum(c_coefficient(alpha, k, p) * counts.count(p) for p in s_k_set(k))
    expected = Fraction(vector_factorial(k) * graph_sum, vector_factorial(alpha))
    return shifted[order], expected


@traceable(name="check_coefficient_derivative")
def check_coefficient_derivative(n: int, alpha: Vector, k: Vector) -> bool:
    """(q-1)^(|k|-|alpha|+1) divides a(alpha, k, q) and the quotient at 1 matches the graph sum"""
    if norm(k) == norm(alpha):
        logger.info("Boundary case |k| = |alpha| for alpha=%s, k=%s", tuple(alpha), tuple(k))
    actual, expected = coefficient_derivative_values(n, alpha, k)
    return actual == expected


def is_boundary_case(alpha: Vector, k: Vector) -> bool:
    return norm(k) == norm(alpha)


def vanishes_at_1(table: MahlerTable) -> bool:
    """a(alpha, k, 1) = 0 for every stored |k| >= |alpha|"""
    return all(
        not qpoly_evaluate(a, 1) for k, a in table.coeffs.items() if norm(k) >= norm(table.alpha)
    )


def angle_binomial_matches_qbinom(b: int, ell: int) -> bool:
    """<q^b choose l> == [b choose l]_q"""
    return angle_binomial(Q_FIELD(Q**b), ell) == Q_FIELD(qbinom(b, ell))

