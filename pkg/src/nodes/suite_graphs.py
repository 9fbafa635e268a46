# src/nodes/suite_graphs.py

import logging
from fractions import Fraction
from typing import Any, Dict, List

from langsmith import traceable

from ..checks import run_check
from ..config import BRUTEFORCE_EDGE_LIMIT
from ..graph_counts import (
    connected_counts,
    connected_counts_bruteforce,
    connected_graph_totals,
    edge_capacities,
    exponential_corollary_check,
    exponential_formula_check,
)
from ..report import format_vector
from ..state import CheckResult, VerifyState
from ..vectors import box, compositions, norm

logger = logging.getLogger(__name__)

SUITE = "graphs"

# Connected labelled graphs on m vertices, m = 1..7
CONNECTED_TOTALS = [1, 1, 4, 38, 728, 26704, 1866256]


def _class_vectors(grid: Dict[str, Any]) -> List[tuple]:
    """Class-size vectors with positive entries up to the configured size"""
    vectors = []
    for n in range(1, grid["graphs_max_n"] + 1):
        for size in range(n, grid["graphs_max_size"] + 1):
            vectors.extend(v for v in compositions(size, n) if all(v))
    return vectors


def _table_text(table) -> str:
    return "; ".join(f"{format_vector(k)}:{c}" for k, c in sorted(table.counts.items()))


def _oracle_checks(grid: Dict[str, Any], threads: int) -> List[CheckResult]:
    results = []
    for ell in _class_vectors(grid):
        budget = sum(edge_capacities(ell))
        if budget > BRUTEFORCE_EDGE_LIMIT:
            logger.debug("Skipping brute force for l=%s (%d possible edges)", ell, budget)
            continue
        expected = _table_text(connected_counts_bruteforce(ell, budget, threads=threads))
        results.append(
            run_check(
                SUITE,
                f"G^{format_vector(ell)} vs brute force",
                expected,
                lambda ell=ell, budget=budget: _table_text(connected_counts(ell, budget)),
            )
        )
    return results


def _vanishing_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    """Nothing with fewer than |l| - 1 edges is connected"""
    results = []
    for ell in _class_vectors(grid):
        table = connected_counts(ell, norm(ell))
        below = [k for k in table.counts if norm(k) < norm(ell) - 1]
        results.append(
            run_check(SUITE, f"G^{format_vector(ell)} vanishing below |l|-1", "none", lambda b=below: _join(b))
        )
    return results


def _join(vectors) -> str:
    return "; ".join(format_vector(v) for v in vectors) or "none"


def _cayley_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    return [
        run_check(
            SUITE,
            f"trees on {m} vertices",
            1 if m == 1 else m ** (m - 2),
            lambda m=m: connected_counts((m,), m - 1).count((m - 1,)),
        )
        for m in range(1, grid["cayley_max"] + 1)
    ]


def _exponential_formula_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    size = grid["expformula_max_size"]
    results = []
    for bound in ((size,), (size // 2, size - size // 2)):
        ones = {beta: Fraction(1) for beta in box(bound) if any(beta)}
        results.append(
            run_check(
                SUITE,
                f"exponential formula, f = 1, bound {format_vector(bound)}",
                True,
                lambda f=ones, b=bound: exponential_formula_check(f, b),
            )
        )
        totals = connected_graph_totals(bound)
        results.append(
            run_check(
                SUITE,
                f"exponential formula, f = connected totals, bound {format_vector(bound)}",
                True,
                lambda f=totals, b=bound: exponential_formula_check(f, b),
            )
        )
    for m in range(1, min(size, len(CONNECTED_TOTALS)) + 1):
        results.append(
            run_check(
                SUITE,
                f"connected graphs on {m} vertices",
                CONNECTED_TOTALS[m - 1],
                lambda m=m: connected_graph_totals((m,))[(m,)],
            )
        )
    return results


def _corollary_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    bounds = [(3,), (2, 1)] if grid["graphs_max_size"] <= 4 else [(4,), (2, 2), (1, 1, 1)]
    return [
        run_check(
            SUITE,
            f"u-substitution corollary up to {format_vector(bound)}",
            True,
            lambda b=bound: exponential_corollary_check(b),
        )
        for bound in bounds
    ]


@traceable(name="suite_graphs")
def run_graphs_suite(state: VerifyState) -> Dict[str, Any]:
    """Connected-graph counts against brute force and their closed-form consequences"""
    grid = state["grid"]
    results = (
        _oracle_checks(grid, state.get("threads", 1))
        + _vanishing_checks(grid)
        + _cayley_checks(grid)
        + _exponential_formula_checks(grid)
        + _corollary_checks(grid)
    )
    logger.info("graphs: %d/%d checks passed", sum(r.passed for r in results), len(results))
    return {"results": results}
