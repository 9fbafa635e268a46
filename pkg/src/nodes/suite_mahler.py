# src/nodes/suite_mahler.py

import logging
from typing import Any, Dict, List

from langsmith import traceable

from ..arith import qpoly_is_integral
from ..checks import error_check, run_check
from ..errors import KacError
from ..hua import kac_polynomial
from ..mahler import (
    coefficient_derivative_values,
    is_boundary_case,
    mahler_table,
    reconstruct,
    vanishes_at_1,
)
from ..report import format_fraction, format_qpoly, format_vector
from ..state import CheckResult, MahlerTable, Quiver, VerifyState
from ..vectors import compositions, edge_count, norm

logger = logging.getLogger(__name__)

SUITE = "mahler"

PAIR_ALPHAS = [(1, 1)]


def _table_checks(table: MahlerTable, g_points: List[tuple]) -> List[CheckResult]:
    label = f"n={table.n} alpha={format_vector(table.alpha)}"
    results = [
        run_check(
            SUITE,
            f"{label} reconstruct g={format_vector(g)}",
            format_qpoly(kac_polynomial(Quiver.from_multiplicities(table.n, g), table.alpha)),
            lambda g=g: format_qpoly(reconstruct(table, g)),
        )
        for g in g_points
    ]
    results.append(
        run_check(
            SUITE,
            f"{label} integral coefficients",
            True,
            lambda: all(qpoly_is_integral(a) for a in table.coeffs.values()),
        )
    )
    results.append(run_check(SUITE, f"{label} vanishing at q=1", True, lambda: vanishes_at_1(table)))
    return results


def derivative_checks(n: int, alpha: tuple) -> List[CheckResult]:
    """(q-1)-order law for |alpha| <= |k| <= |alpha| + 2; |k| = |alpha| flagged as boundary"""
    results = []
    for total in range(norm(alpha), norm(alpha) + 3):
        for k in compositions(total, edge_count(n)):
            name = f"n={n} alpha={format_vector(alpha)} k={format_vector(k)} derivative"
            boundary = is_boundary_case(alpha, k)
            try:
                actual, expected = coefficient_derivative_values(n, alpha, k)
            except KacError as e:
                results.append(error_check(SUITE, name, "graph sum", e, boundary))
                continue
            results.append(
                run_check(
                    SUITE, name, format_fraction(expected), lambda a=actual: format_fraction(a), boundary
                )
            )
    return results


def _tables(grid: Dict[str, Any], threads: int) -> List[CheckResult]:
    results = []
    g_points = [(g,) for g in range(grid["mahler_max_g"] + 1)]
    for alpha in range(1, grid["mahler_max_alpha"] + 1):
        try:
            table = mahler_table(1, (alpha,), (max(alpha * alpha, 1),), threads=threads)
        except KacError as e:
            results.append(error_check(SUITE, f"n=1 alpha={alpha} table", "built", e))
            continue
        results += _table_checks(table, g_points)
    for alpha in PAIR_ALPHAS:
        table = mahler_table(2, alpha, threads=threads)
        results += _table_checks(table, [(0, 1, 0), (1, 2, 0), (2, 3, 1)])
    return results


@traceable(name="suite_mahler")
def run_mahler_suite(state: VerifyState) -> Dict[str, Any]:
    """q-binomial expansions of A in the edge multiplicities"""
    grid = state["grid"]
    results = _tables(grid, state.get("threads", 1))
    for alpha in grid["mahler_derivative_alphas"]:
        results += derivative_checks(1, (alpha,))
    for alpha in PAIR_ALPHAS:
        results += derivative_checks(2, alpha)
    boundary = [r for r in results if r.boundary]
    if boundary:
        logger.info(
            "mahler: %d boundary cases |k| = |alpha|, %d passed",
            len(boundary), sum(r.passed for r in boundary),
        )
    logger.info("mahler: %d/%d checks passed", sum(r.passed for r in results), len(results))
    return {"results": results}
