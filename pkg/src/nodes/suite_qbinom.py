# src/nodes/suite_qbinom.py

import logging
import math
from fractions import Fraction
from typing import Any, Dict, List

from langsmith import traceable

from ..checks import run_check
from ..interpolation import bpoly_degree, bpoly_leading_coefficient
from ..mahler import angle_binomial_matches_qbinom
from ..qcomb import (
    qbinom_derivative_poly,
    qbinom_taylor_product_check,
    ratio_derivative_poly,
    stirling2,
    stirling_egf_check,
)
from ..report import format_fraction
from ..state import CheckResult, VerifyState

logger = logging.getLogger(__name__)

SUITE = "qbinom"


def _shape(degree: int, leading: Fraction) -> str:
    return f"degree {degree}, leading {format_fraction(leading)}"


def _derivative_law_checks(max_kt: int) -> List[CheckResult]:
    results = []
    for k in range(max_kt + 1):
        for t in range(max_kt + 1):
            leading = Fraction(math.factorial(t) * stirling2(k + t, k), math.factorial(k + t))
            # k = 0, t > 0 is the zero polynomial
            expected = _shape(k + t if leading else -1, leading)

            def actual(k=k, t=t):
                poly = qbinom_derivative_poly(k, t)
                return _shape(bpoly_degree(poly), bpoly_leading_coefficient(poly))

            results.append(run_check(SUITE, f"qbinom derivative k={k} t={t}", expected, actual))
    return results


def _ratio_law_checks(max_im: int) -> List[CheckResult]:
    results = []
    for i in range(1, max_im + 1):
        for m in range(0, max_im + 1):

            def actual(i=i, m=m):
                poly = ratio_derivative_poly(i, m)
                return _shape(bpoly_degree(poly), bpoly_leading_coefficient(poly))

            results.append(
                run_check(SUITE, f"ratio derivative i={i} m={m}", _shape(m + 1, Fraction(1, i * (m + 1))), actual)
            )
    return results


@traceable(name="suite_qbinom")
def run_qbinom_suite(state: VerifyState) -> Dict[str, Any]:
    """Derivative laws of Gaussian binomials at q = 1"""
    grid = state["grid"]
    max_kt = grid["qbinom_max_kt"]
    results = _derivative_law_checks(max_kt) + _ratio_law_checks(grid["ratio_max_im"])
    results += [
        run_check(SUITE, f"Stirling EGF k={k}", True, lambda k=k: stirling_egf_check(k))
        for k in range(grid["stirling_max_k"] + 1)
    ]
    results += [
        run_check(
            SUITE,
            f"Taylor product b={b} k={k}",
            True,
            lambda b=b, k=k: qbinom_taylor_product_check(b, k, max_kt),
        )
        for k in range(1, max_kt + 1)
        for b in range(k - 1, k + 3)
    ]
    results += [
        run_check(
            SUITE,
            f"angle binomial b={b} ell={ell}",
            True,
            lambda b=b, ell=ell: angle_binomial_matches_qbinom(b, ell),
        )
        for b in range(max_kt + 2)
        for ell in range(max_kt + 1)
    ]
    logger.info("qbinom: %d/%d checks passed", sum(r.passed for r in results), len(results))
    return {"results": results}
