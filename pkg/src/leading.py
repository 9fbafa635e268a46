# src/leading.py

"""
Leading homogeneous components of d^s/dq^s A(alpha, q) at q = 1 as
polynomials in the edge multiplicities g_ij, and the independent fitting
oracle that recovers the whole polynomial from Hua's formula.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from langsmith import traceable
from sympy.polys.rings import PolyElement

from .arith import mpoly_ring, mpoly_terms
from .errors import DegreeCapError, InvalidIndexError
from .graph_counts import connected_counts, edge_capacities, edge_variable_names
from .hua import kac_derivative_at_1
from .interpolation import binomial_basis_to_mpoly, grid_forward_differences
from .qcomb import stirling2
from .state import LeadingComponent, Quiver
from .vectors import (
    Vector,
    binomial,
    box,
    compositions,
    diagonal_positions,
    edge_count,
    edge_pairs,
    norm,
    vector_factorial,
    vertex_count,
)

logger = logging.getLogger(__name__)


# ==================== INDEX SETS AND c-COEFFICIENTS ====================


def s_k_set(k: Vector) -> List[Vector]:
    """All p with 0 <= p_ii <= k_ii and p_ij = k_ij for i < j"""
    k = tuple(k)
    diagonal = diagonal_positions(vertex_count(len(k)))
    result = []
    for choice in itertools.product(*(range(k[d] + 1) for d in diagonal)):
        p = list(k)
        for position, value in zip(diagonal, choice):
            p[position] = value
        result.append(tuple(p))
    return result


def in_s_k(k: Vector, p: Vector) -> bool:
    if len(k) != len(p):
        return False
    diagonal = set(diagonal_positions(vertex_count(len(k))))
    return all(
        0 <= p[x] <= k[x] if x in diagonal else p[x] == k[x] for x in range(len(k))
    )


def c_coefficient(alpha: Vector, k: Vector, p: Vector) -> int:
    """c^alpha_{kp} = prod_i sum_j C(p_ii, j) C(alpha_i, k_ii - p_ii - j) 2^(p_ii - j)"""
    if not in_s_k(k, p):
        raise InvalidIndexError(f"p={tuple(p)} is not in S_k for k={tuple(k)}")
    n = len(alpha)
    result = 1
    for i, position in enumerate(diagonal_positions(n)):
        kii, pii = k[position], p[position]
        result *= sum(
            binomial(pii, j) * binomial(alpha[i], kii - pii - j) * 2 ** (pii - j)
            for j in range(pii + 1)
        )
    return result


def _graph_sum(alpha: Vector, k: Vector, counts) -> int:
    """sum_{p in S_k} c^alpha_{kp} G_p^alpha"""
    return sum(c_coefficient(alpha, k, p) * counts.count(p) for p in s_k_set(k))


# ==================== LEADING COMPONENTS ====================


@traceable(name="leading_component")
def leading_component(n: int, alpha: Vector, s: int) -> LeadingComponent:
    """
    Coefficient of g^l, |l| = s + |alpha| - 1, in d^s/dq^s A(alpha, q)|_{q=1}:

        (1/alpha!) (s!/l!) sum_{k <= l} S(l, k) k! sum_{p in S_k} c^alpha_{kp} G_p^alpha

    with S(l, k) = prod S(l_ij, k_ij).
    """
    alpha = tuple(alpha)
    if s < 0 or not any(alpha) or len(alpha) != n:
        raise ValueError(f"leading_component needs s >= 0 and nonzero alpha of length {n}")
    degree = s + norm(alpha) - 1
    counts = connected_counts(alpha, degree)
    terms: Dict[Vector, Fraction] = {}
    for ell in compositions(degree, edge_count(n)):
        total = 0
        for k in box(ell):
            stirling = math.prod(stirling2(a, b) for a, b in zip(ell, k))
            if not stirling or norm(k) < norm(alpha) - 1:
                continue
            total += stirling * vector_factorial(k) * _graph_sum(alpha, k, counts)
        if total:
            terms[ell] = Fraction(
                math.factorial(s) * total, vector_factorial(ell) * vector_factorial(alpha)
            )
    return LeadingComponent(alpha=alpha, s=s, terms=terms)


def leading_component_at_q1(n: int, alpha: Vector) -> LeadingComponent:
    """The s = 0 component computed directly as 2^t(k) G_k^alpha / alpha!, t(k) = sum k_ii"""
    alpha = tuple(alpha)
    degree = norm(alpha) - 1
    counts = connected_counts(alpha, degree)
    diagonal = diagonal_positions(n)
    terms = {}
    for k, count in counts.counts.items():
        if norm(k) == degree:
            loops = sum(k[d] for d in diagonal)
            terms[k] = Fraction(2**loops * count, vector_factorial(alpha))
    return LeadingComponent(alpha=alpha, s=0, terms=terms)


def single_vertex_leading_coefficient(alpha: int, s: int) -> Fraction:
    """The n = 1 closed form of the g^(s+alpha-1) coefficient"""
    top = s + alpha - 1
    counts = connected_counts((alpha,), top)
    total = 0
    for k in range(alpha - 1, top + 1):
        inner = sum(
            counts.count((p,))
            * sum(
                binomial(p, j) * binomial(alpha, k - p - j) * 2 ** (p - j)
                for j in range(p + 1)
            )
            for p in range(alpha - 1, k + 1)
        )
        total += stirling2(top, k) * math.factorial(k) * inner
    return Fraction(
        math.factorial(s) * total, math.factorial(alpha) * math.factorial(top)
    )


def limit_polynomial(alpha: Vector) -> PolyElement:
    """(1/alpha!) sum_k G_k^alpha prod_{i<j} u_ij^k_ij prod_i ((1+u_ii)^2-1)^k_ii (1+u_ii)^alpha_i"""
    alpha = tuple(alpha)
    n = len(alpha)
    R = mpoly_ring(edge_variable_names(n, prefix="v"))
    counts = connected_counts(alpha, sum(edge_capacities(alpha)))
    result = R.zero
    for k, count in counts.counts.items():
        term = R.one * count
        for (i, j), generator, k_ij in zip(edge_pairs(n), R.gens, k):
            if i == j:
                term *= ((1 + generator) ** 2 - 1) ** k_ij
            else:
                term *= generator**k_ij
        result += term
    for (i, j), generator in zip(edge_pairs(n), R.gens):
        if i == j:
            result *= (1 + generator) ** alpha[i]
    return result / vector_factorial(alpha)


def check_intermediate_coefficients(alpha: Vector) -> bool:
    """Every coefficient of v^k in limit_polynomial equals (1/alpha!) sum_{p in S_k} c G_p"""
    alpha = tuple(alpha)
    poly = limit_polynomial(alpha)
    counts = connected_counts(alpha, sum(edge_capacities(alpha)))
    expansion = mpoly_terms(poly)
    n = len(alpha)
    bound = tuple(
        2 * cap + alpha[i] if i == j else cap
        for (i, j), cap in zip(edge_pairs(n), edge_capacities(alpha))
    )
    for k in set(expansion) | set(box(bound)):
        expected = Fraction(_graph_sum(alpha, k, counts), vector_factorial(alpha))
        if expansion.get(tuple(k), Fraction(0)) != expected:
            logger.info("Intermediate coefficient mismatch at k=%s", k)
            return False
    return True


# ==================== FIT ORACLE ====================


@dataclass(frozen=True)
class GPolynomial:
    """
    A polynomial in the g_ij, kept both in the binomial basis prod C(g_ij, j_ij)
    and in monomial form.
    """

    n: int
    binomial_coefficients: Mapping[Vector, Fraction]
    poly: PolyElement

    @property
    def terms(self) -> Dict[Vector, Fraction]:
        return mpoly_terms(self.poly)

    @property
    def total_degree(self) -> int:
        return max((norm(m) for m in self.terms), default=-1)

    def evaluate(self, g: Vector) -> Fraction:
        return sum(
            (c * math.prod(x**e for x, e in zip(g, m)) for m, c in self.terms.items()),
            Fraction(0),
        )

    def binomial_row(self) -> List[Fraction]:
        """n = 1 only: binomial-basis coefficients, highest C(g, k) first"""
        if self.n != 1:
            raise ValueError("binomial_row is defined for one-vertex quivers")
        top = max((j[0] for j in self.binomial_coefficients), default=-1)
        return [
            self.binomial_coefficients.get((k,), Fraction(0)) for k in range(top, -1, -1)
        ]


def top_homogeneous_part(fit: GPolynomial) -> Dict[Vector, Fraction]:
    degree = fit.total_degree
    return {m: c for m, c in fit.terms.items() if norm(m) == degree}


def fit_agrees_with_leading(fit: GPolynomial, leading: LeadingComponent) -> bool:
    """The fit has no terms above the leading degree and matches it termwise there"""
    degree = leading.degree
    terms = fit.terms
    if any(norm(m) > degree for m in terms):
        return False
    homogeneous = {m: c for m, c in terms.items() if norm(m) == degree}
    return homogeneous == {m: c for m, c in leading.terms.items() if c}


def _sample(args: Tuple[int, Vector, Vector, int]) -> int:
    n, g, alpha, s = args
    return kac_derivative_at_1(Quiver.from_multiplicities(n, g), alpha, s)


@traceable(name="fit_polynomial_in_g")
def fit_polynomial_in_g(
    n: int, alpha: Vector, s: int, degree_cap: int, threads: int = 1
) -> GPolynomial:
    """
    Interpolate g -> d^s/dq^s A(alpha, q)|_{q=1} on {0..degree_cap}^(n(n+1)/2)
    by Newton forward differences. The grid is sampled one step further in
    every direction; differences of order degree_cap + 1 must vanish there.
    """
    alpha = tuple(alpha)
    if degree_cap < s + norm(alpha) - 1:
        raise ValueError(
            f"degree_cap {degree_cap} is below the expected degree {s + norm(alpha) - 1}"
        )
    bound = (degree_cap + 1,) * edge_count(n)
    points = list(box(bound))
    logger.info("Fitting alpha=%s, s=%d on %d grid points", alpha, s, len(points))
    with ThreadPoolExecutor(max_workers=threads) as executor:
        values = list(executor.map(_sample, [(n, g, alpha, s) for g in points]))
    differences = grid_forward_differences(dict(zip(points, values)), bound)
    overflow = [j for j in differences if max(j) > degree_cap]
    if overflow:
        raise DegreeCapError(
            f"Differences of order {degree_cap + 1} do not vanish for alpha={alpha}, s={s} "
            f"(e.g. at {overflow[0]})"
        )
    R = mpoly_ring(edge_variable_names(n, prefix="g"))
    return GPolynomial(
        n=n,
        binomial_coefficients=differences,
        poly=binomial_basis_to_mpoly(differences, R),
    )


def fit_binomial_row_at_q1(
    alpha: int, degree_cap: Optional[int] = None, threads: int = 1
) -> List[Fraction]:
    """Binomial-basis row of A(S_g, alpha, 1), highest C(g, k) first"""
    cap = alpha - 1 if degree_cap is None else degree_cap
    return fit_polynomial_in_g(1, (alpha,), 0, cap, threads).binomial_row()

