# src/graph_counts.py

"""
Connected simple graphs on a vertex set split into classes V_1, ..., V_n.

G_k^l counts the connected graphs with |V_i| = l_i and exactly k_ij edges
between V_i and V_j (i <= j). They come out of the exponential formula:

    log sum_l prod_{i<j}(1+x_ij)^(l_i l_j) prod_i (1+x_ii)^C(l_i,2) X^l/l!
        = sum_{l != 0} sum_k G_k^l x^k X^l/l!
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from langsmith import traceable
from sympy.utilities.iterables import multiset_partitions

from .arith import (
    MPoly,
    TruncSeries,
    fraction_to_int,
    mpoly_ring,
    mpoly_truncate,
    series_exp,
    series_log,
    to_fraction,
)
from .config import BRUTEFORCE_EDGE_LIMIT, SET_PARTITION_LIMIT
from .errors import InstanceTooLargeError
from .state import GraphCountTable
from .vectors import Vector, box, edge_count, edge_index, edge_pairs, norm, vector_factorial

logger = logging.getLogger(__name__)


def edge_variable_names(n: int, prefix: str = "x") -> Tuple[str, ...]:
    return tuple(f"{prefix}_{i + 1}_{j + 1}" for i, j in edge_pairs(n))


def edge_capacities(ell: Vector) -> Vector:
    """Possible edges per class pair: l_i l_j for i < j, C(l_i, 2) on the diagonal"""
    n = len(ell)
    return tuple(
        math.comb(ell[i], 2) if i == j else ell[i] * ell[j] for i, j in edge_pairs(n)
    )


def all_graphs_generating_polynomial(ell: Vector, budget: int) -> MPoly:
    """prod (1 + x_ij)^capacity_ij, truncated to total x-degree <= budget"""
    ell = tuple(ell)
    R = mpoly_ring(edge_variable_names(len(ell)))
    result = R.one
    for generator, capacity in zip(R.gens, edge_capacities(ell)):
        factor = R.zero
        for k in range(min(capacity, budget) + 1):
            factor += generator**k * math.comb(capacity, k)
        result = mpoly_truncate(result * factor, budget)
    return result


@lru_cache(maxsize=256)
def _connected_counts(ell: Vector, budget: int) -> GraphCountTable:
    n = len(ell)
    R = mpoly_ring(edge_variable_names(n))
    coeffs = {
        beta: all_graphs_generating_polynomial(beta, budget) / vector_factorial(beta)
        for beta in box(ell)
    }
    series = TruncSeries(ell, coeffs, R.one, truncate=lambda p: mpoly_truncate(p, budget))
    connected = series_log(series).coefficient(ell) * vector_factorial(ell)
    counts = {}
    for monom, c in connected.items():
        counts[tuple(monom)] = fraction_to_int(to_fraction(c), f"G_{tuple(monom)}^{ell}")
    logger.debug("Connected counts for l=%s, budget %d: %d nonzero", ell, budget, len(counts))
    return GraphCountTable(ell=ell, counts=counts, edge_budget=budget)


@traceable(name="connected_counts")
def connected_counts(ell: Vector, budget: int) -> GraphCountTable:
    """G_k^l for |k| <= budget via the exponential formula"""
    ell = tuple(ell)
    if budget < 0 or any(x < 0 for x in ell):
        raise ValueError(f"connected_counts needs l >= 0 and budget >= 0, got {ell}, {budget}")
    if not any(ell):
        return GraphCountTable(ell=ell, counts={}, edge_budget=budget)
    return _connected_counts(ell, budget)


# ==================== BRUTE FORCE ====================


def _class_layout(ell: Vector) -> List[int]:
    """Class of every vertex: the first l_1 vertices are V_1, and so on"""
    return [c for c, size in enumerate(ell) for _ in range(size)]


def _is_connected(vertex_count: int, edges) -> bool:
    parent = list(range(vertex_count))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = vertex_count
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def _tally_subsets(args) -> Dict[Vector, int]:
    vertex_count, n, pairs, classes, size = args
    tally: Dict[Vector, int] = {}
    for subset in itertools.combinations(pairs, size):
        if not _is_connected(vertex_count, subset):
            continue
        k = [0] * edge_count(n)
        for u, v in subset:
            k[edge_index(n, classes[u], classes[v])] += 1
        k = tuple(k)
        tally[k] = tally.get(k, 0) + 1
    return tally


@traceable(name="connected_counts_bruteforce")
def connected_counts_bruteforce(ell: Vector, budget: int, threads: int = 1) -> GraphCountTable:
    """G_k^l by enumerating every edge subset with at most `budget` edges"""
    ell = tuple(ell)
    possible = sum(edge_capacities(ell))
    if possible > BRUTEFORCE_EDGE_LIMIT:
        raise InstanceTooLargeError(
            f"l={ell} has {possible} possible edges, brute force is limited to {BRUTEFORCE_EDGE_LIMIT}"
        )
    vertex_count = norm(ell)
    if vertex_count == 0:
        return GraphCountTable(ell=ell, counts={}, edge_budget=budget)
    classes = _class_layout(ell)
    pairs = list(itertools.combinations(range(vertex_count), 2))
    jobs = [
        (vertex_count, len(ell), pairs, classes, size)
        for size in range(min(budget, len(pairs)) + 1)
    ]
    counts: Dict[Vector, int] = {}
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for tally in executor.map(_tally_subsets, jobs):
            for k, c in tally.items():
                counts[k] = counts.get(k, 0) + c
    return GraphCountTable(ell=ell, counts=counts, edge_budget=budget)


# ==================== EXPONENTIAL FORMULA ====================


def _block_type(block, classes: List[int], n: int) -> Vector:
    composition = [0] * n
    for v in block:
        composition[classes[v]] += 1
    return tuple(composition)


def set_partition_sum(f: Mapping[Vector, Fraction], beta: Vector) -> Fraction:
    """g(beta) = sum over set partitions of prod_blocks f(block class composition)"""
    vertex_count = norm(beta)
    if vertex_count == 0:
        return Fraction(1)
    classes = _class_layout(beta)
    total = Fraction(0)
    for partition in multiset_partitions(list(range(vertex_count))):
        product = Fraction(1)
        for block in partition:
            product *= Fraction(f.get(_block_type(block, classes, len(beta)), 0))
            if not product:
                break
        total += product
    return total


@traceable(name="exponential_formula_check")
def exponential_formula_check(f: Mapping[Vector, Fraction], bound: Vector) -> bool:
    """Compare g from set partitions with g from exp(sum f X^l / l!) over the box <= bound"""
    bound = tuple(bound)
    if norm(bound) > SET_PARTITION_LIMIT:
        raise InstanceTooLargeError(
            f"|bound| = {norm(bound)} exceeds the set-partition limit {SET_PARTITION_LIMIT}"
        )
    one = Fraction(1)
    ef = TruncSeries(
        bound,
        {
            beta: Fraction(f.get(beta, 0)) / vector_factorial(beta)
            for beta in box(bound)
            if any(beta)
        },
        one,
    )
    eg = series_exp(ef)
    for beta in box(bound):
        via_series = eg.coefficient(beta) * vector_factorial(beta)
        via_partitions = set_partition_sum(f, beta)
        if via_series != via_partitions:
            logger.info("Exponential formula mismatch at %s: %s vs %s", beta, via_series, via_partitions)
            return False
    return True


def connected_graph_totals(bound: Vector) -> Dict[Vector, int]:
    """Number of connected graphs on every class vector 0 != l <= bound (x := 1)"""
    totals = {}
    for ell in box(bound):
        if any(ell):
            table = connected_counts(ell, sum(edge_capacities(ell)))
            totals[ell] = sum(table.counts.values())
    return totals


# ==================== SUBSTITUTION COROLLARY ====================


def exponential_corollary_check(ell_max: Vector) -> bool:
    """
    With u^l = prod_{i<=j} u_ij^(l_i l_j), the coefficient of T^a in
    log sum_l u^l T^l / l! equals
    (1/a!) sum_k G_k^a prod_{i<j} (u_ij - 1)^k_ij prod_i (u_ii^2 - 1)^k_ii u_ii^a_i.
    """
    ell_max = tuple(ell_max)
    n = len(ell_max)
    R = mpoly_ring(edge_variable_names(n, prefix="u"))
    pairs = edge_pairs(n)

    def u_power(ell: Vector) -> MPoly:
        term = R.one
        for (i, j), generator in zip(pairs, R.gens):
            term *= generator ** (ell[i] * ell[j])
        return term

    series = TruncSeries(
        ell_max, {ell: u_power(ell) / vector_factorial(ell) for ell in box(ell_max)}, R.one
    )
    logarithm = series_log(series)
    for alpha in box(ell_max):
        if not any(alpha):
            continue
        table = connected_counts(alpha, sum(edge_capacities(alpha)))
        expected = R.zero
        for k, count in table.counts.items():
            term = R.one * count
            for (i, j), generator, k_ij in zip(pairs, R.gens, k):
                if i == j:
                    term *= (generator**2 - 1) ** k_ij
                else:
                    term *= (generator - 1) ** k_ij
            expected += term
        for (i, j), generator in zip(pairs, R.gens):
            if i == j:
                expected *= generator ** alpha[i]
        expected = expected / vector_factorial(alpha)
        if logarithm.coefficient(alpha) != expected:
            logger.info("Substitution corollary fails at alpha=%s", alpha)
            return False
    return True
