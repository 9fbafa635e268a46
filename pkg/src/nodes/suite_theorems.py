# src/nodes/suite_theorems.py

import logging
import math
from fractions import Fraction
from typing import Any, Dict, List

from langsmith import traceable

from ..checks import run_check
from ..leading import (
    check_intermediate_coefficients,
    fit_agrees_with_leading,
    fit_polynomial_in_g,
    leading_component,
    leading_component_at_q1,
    single_vertex_leading_coefficient,
)
from ..report import format_fraction, format_vector
from ..state import CheckResult, VerifyState
from ..vectors import compositions

logger = logging.getLogger(__name__)

SUITE = "theorems"


def _alphas(grid: Dict[str, Any]) -> List[tuple]:
    single = [(a,) for a in range(1, grid["theorem_single_max_alpha"] + 1)]
    pairs = [
        alpha
        for size in range(2, grid["theorem_pair_max_size"] + 1)
        for alpha in compositions(size, 2)
        if all(alpha)
    ]
    return single + pairs


def _max_s(grid: Dict[str, Any], alpha: tuple) -> int:
    return grid["theorem_single_max_s"] if len(alpha) == 1 else grid["theorem_pair_max_s"]


def _fit_checks(grid: Dict[str, Any], threads: int) -> List[CheckResult]:
    """Leading component against the top homogeneous part of the interpolated polynomial"""
    results = []
    for alpha in _alphas(grid):
        n = len(alpha)
        for s in range(_max_s(grid, alpha) + 1):

            def agrees(alpha=alpha, n=n, s=s):
                leading = leading_component(n, alpha, s)
                fit = fit_polynomial_in_g(n, alpha, s, leading.degree, threads=threads)
                return fit_agrees_with_leading(fit, leading)

            results.append(
                run_check(SUITE, f"fit vs leading alpha={format_vector(alpha)} s={s}", True, agrees)
            )
    return results


def _q1_path_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    """At s = 0 the leading component is 2^t G / alpha!, computed without Stirling sums"""
    return [
        run_check(
            SUITE,
            f"s=0 graph form alpha={format_vector(alpha)}",
            True,
            lambda alpha=alpha: leading_component_at_q1(len(alpha), alpha).terms
            == leading_component(len(alpha), alpha, 0).terms,
        )
        for alpha in _alphas(grid)
    ]


def _single_vertex_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    results = []
    for alpha in range(1, grid["theorem_closed_form_max_alpha"] + 1):
        # Leading coefficient of A(S_g, alpha, 1) is 2^(alpha-1) alpha^(alpha-2) / alpha!
        expected = Fraction(2 ** (alpha - 1) * Fraction(alpha) ** (alpha - 2), math.factorial(alpha))
        results.append(
            run_check(
                SUITE,
                f"n=1 alpha={alpha} s=0 leading coefficient",
                format_fraction(expected),
                lambda a=alpha: format_fraction(leading_component(1, (a,), 0).terms[(a - 1,)]),
            )
        )
        for s in range(grid["theorem_single_max_s"] + 1):
            results.append(
                run_check(
                    SUITE,
                    f"n=1 alpha={alpha} s={s} closed form",
                    format_fraction(single_vertex_leading_coefficient(alpha, s)),
                    lambda a=alpha, s=s: format_fraction(
                        leading_component(1, (a,), s).terms.get((s + a - 1,), Fraction(0))
                    ),
                )
            )
    return results


def _intermediate_checks(grid: Dict[str, Any]) -> List[CheckResult]:
    alphas = [(a,) for a in range(1, min(grid["theorem_single_max_alpha"], 3) + 1)] + [(1, 1)]
    return [
        run_check(
            SUITE,
            f"intermediate coefficients alpha={format_vector(alpha)}",
            True,
            lambda alpha=alpha: check_intermediate_coefficients(alpha),
        )
        for alpha in alphas
    ]


@traceable(name="suite_theorems")
def run_theorems_suite(state: VerifyState) -> Dict[str, Any]:
    """Leading components of the derivatives at q = 1 as polynomials in the edge multiplicities"""
    grid = state["grid"]
    results = (
        _fit_checks(grid, state.get("threads", 1))
        + _q1_path_checks(grid)
        + _single_vertex_checks(grid)
        + _intermediate_checks(grid)
    )
    logger.info("theorems: %d/%d checks passed", sum(r.passed for r in results), len(results))
    return {"results": results}
