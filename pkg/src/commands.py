# src/commands.py

"""
Command implementations behind main.py. Each returns a RunReport; rendering
and exit codes are main.py's business.
"""

import logging
import time
from typing import List, Optional, Sequence

from langsmith import traceable

from .arith import qpoly_degree, qpoly_evaluate
from .checks import run_check
from .errors import SpecParseError
from .graph_counts import connected_counts, connected_counts_bruteforce
from .hua import kac_derivative_at_1, kac_polynomial
from .leading import fit_polynomial_in_g, leading_component
from .mahler import mahler_table
from .nodes.suite_mahler import derivative_checks
from .report import format_fraction, format_gpoly, format_vector, gpoly_to_pairs, qpoly_to_pairs
from .state import Quiver, RunReport
from .vectors import edge_count, edge_pairs, norm

logger = logging.getLogger(__name__)


def _g_names(n: int) -> List[str]:
    return [f"g{i + 1}{j + 1}" for i, j in edge_pairs(n)]


@traceable(name="cmd_kac")
def cmd_kac(quiver: Quiver, alpha: Sequence[int], s: int = 0, command: str = "kac") -> RunReport:
    """A(alpha, q) and, for s > 0, its derivatives 0..s at q = 1"""
    start = time.perf_counter()
    alpha = tuple(alpha)
    if s < 0:
        raise SpecParseError(f"must be >= 0, got {s}", field="s")
    poly = kac_polynomial(quiver, alpha)
    record = {
        "quiver": quiver.describe(),
        "alpha": format_vector(alpha),
        "polynomial": qpoly_to_pairs(poly),
        "degree": qpoly_degree(poly),
    }
    if quiver.name:
        record = {"name": quiver.name, **record}
    if s > 0:
        record["derivatives"] = [str(kac_derivative_at_1(quiver, alpha, t)) for t in range(s + 1)]
    return RunReport(
        command=command,
        inputs={"quiver": quiver.describe(), "alpha": list(alpha), "s": s},
        records=[record],
        wall_time=time.perf_counter() - start,
    )


@traceable(name="cmd_graphs")
def cmd_graphs(
    n: int,
    ell: Sequence[int],
    budget: int,
    oracle: bool = False,
    threads: int = 1,
    command: str = "graphs",
) -> RunReport:
    """Connected-graph counts G_k^l, optionally cross-checked by brute force"""
    start = time.perf_counter()
    ell = tuple(ell)
    if len(ell) != n:
        raise SpecParseError(f"expected {n} entries, got {len(ell)}", field="ell")
    table = connected_counts(ell, budget)
    records = [
        {"ell": format_vector(ell), "k": format_vector(k), "count": count}
        for k, count in sorted(table.counts.items())
    ]
    checks = []
    if oracle:
        brute = connected_counts_bruteforce(ell, budget, threads=threads)
        for k in sorted(set(table.counts) | set(brute.counts)):
            checks.append(
                run_check(
                    "graphs",
                    f"G_{format_vector(k)}^{format_vector(ell)}",
                    brute.count(k),
                    lambda k=k: table.count(k),
                )
            )
    return RunReport(
        command=command,
        inputs={"n": n, "ell": list(ell), "budget": budget, "oracle": oracle},
        records=records,
        checks=checks,
        wall_time=time.perf_counter() - start,
    )


@traceable(name="cmd_leading")
def cmd_leading(
    n: int,
    alpha: Sequence[int],
    s: int = 0,
    fit: bool = False,
    degree_cap: Optional[int] = None,
    threads: int = 1,
    command: str = "leading",
) -> RunReport:
    """Leading component of the s-th derivative at q = 1, optionally against the fit"""
    start = time.perf_counter()
    alpha = tuple(alpha)
    leading = leading_component(n, alpha, s)
    records = [
        {
            "alpha": format_vector(alpha),
            "s": s,
            "ell": format_vector(ell),
            "coefficient": format_fraction(c),
        }
        for ell, c in sorted(leading.terms.items(), reverse=True)
    ]
    checks = []
    if fit:
        cap = leading.degree if degree_cap is None else degree_cap
        fitted = fit_polynomial_in_g(n, alpha, s, cap, threads=threads)
        records.append(
            {"alpha": format_vector(alpha), "s": s, "fit": gpoly_to_pairs(fitted.terms)}
        )
        names = _g_names(n)
        top = {m: c for m, c in fitted.terms.items() if norm(m) >= leading.degree}
        checks.append(
            run_check(
                "leading",
                f"top part alpha={format_vector(alpha)} s={s}",
                format_gpoly(leading.terms, names),
                lambda: format_gpoly(top, names),
            )
        )
    return RunReport(
        command=command,
        inputs={"n": n, "alpha": list(alpha), "s": s, "fit": fit},
        records=records,
        checks=checks,
        wall_time=time.perf_counter() - start,
    )


@traceable(name="cmd_mahler")
def cmd_mahler(
    n: int,
    alpha: Sequence[int],
    bound: Optional[Sequence[int]] = None,
    derivative: bool = False,
    threads: int = 1,
    command: str = "mahler",
) -> RunReport:
    """
    q-binomial expansion coefficients a(alpha, k, q); with `derivative`, the
    (q-1)-order law for |alpha| <= |k| <= |alpha| + 2, boundary |k| = |alpha|
    reported separately.
    """
    start = time.perf_counter()
    alpha = tuple(alpha)
    if bound is not None and len(bound) != edge_count(n):
        raise SpecParseError(f"expected {edge_count(n)} entries, got {len(bound)}", field="box")
    if bound is not None and any(b < 0 for b in bound):
        raise SpecParseError(f"entries must be >= 0, got {format_vector(bound)}", field="box")
    table = mahler_table(n, alpha, None if bound is None else tuple(bound), threads=threads)
    records = [
        {
            "alpha": format_vector(alpha),
            "k": format_vector(k),
            "a": qpoly_to_pairs(a),
            "a_at_1": format_fraction(qpoly_evaluate(a, 1)),
        }
        for k, a in sorted(table.coeffs.items())
    ]
    checks = derivative_checks(n, alpha) if derivative else []
    return RunReport(
        command=command,
        inputs={"n": n, "alpha": list(alpha), "box": list(table.box), "extensions": table.extensions},
        records=records,
        checks=checks,
        wall_time=time.perf_counter() - start,
    )


@traceable(name="cmd_verify")
def cmd_verify(
    suites: Sequence[str], size: str = "quick", threads: int = 1, command: str = "verify"
) -> RunReport:
    """Run the verification graph over the selected suites"""
    from .pipeline import run_verification

    start = time.perf_counter()
    results, summary = run_verification(list(suites), size, threads)
    return RunReport(
        command=command,
        inputs={"suites": list(suites), "size": size, **(summary or {})},
        checks=results,
        wall_time=time.perf_counter() - start,
    )
