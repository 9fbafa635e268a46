# src/nodes/summarizer.py

import logging
from typing import Any, Dict, List, Sequence

from ..state import CheckResult, VerifyState

logger = logging.getLogger(__name__)


def canonical_order(results: Sequence[CheckResult], suites: Sequence[str]) -> List[CheckResult]:
    """Suite order as requested, production order within a suite"""
    order = {suite: index for index, suite in enumerate(suites)}
    return sorted(results, key=lambda r: order.get(r.suite, len(order)))


def summarize_results(state: VerifyState) -> Dict[str, Any]:
    """
    SUMMARIZER - Joins the parallel suites.

    Boundary cases are counted separately from the regular checks.
    """
    results = canonical_order(state.get("results", []), state["suites"])
    regular = [r for r in results if not r.boundary]
    boundary = [r for r in results if r.boundary]

    per_suite = {}
    for suite in state["suites"]:
        mine = [r for r in results if r.suite == suite]
        passed = sum(r.passed for r in mine)
        per_suite[suite] = f"{passed}/{len(mine)}"
        logger.info("%s %s: %d/%d passed", "✅" if passed == len(mine) else "❌", suite, passed, len(mine))

    summary = {
        "checks": len(regular),
        "passed": sum(r.passed for r in regular),
        "boundary_checks": len(boundary),
        "boundary_passed": sum(r.passed for r in boundary),
        "per_suite": per_suite,
    }
    return {"summary": summary}
