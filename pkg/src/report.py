# src/report.py

"""
Serialization of polynomials and run reports.

Machine formats carry polynomials as explicit [exponent, coefficient] pairs
with coefficients as exact strings ("3", "-1/2"); the table format renders
them human-readable. Machine output is deterministic: keys are sorted and
wall time is left out.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .arith import QPoly, qpoly_from_terms, qpoly_terms
from .state import RunReport
from .vectors import Vector, edge_pairs, vertex_count

FORMATS = ("table", "json", "csv")


# ==================== SCALARS AND POLYNOMIALS ====================


def format_fraction(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def qpoly_to_pairs(p: QPoly) -> List[List[Any]]:
    """[[exponent, "coefficient"], ...], highest exponent first"""
    return [[e, format_fraction(c)] for e, c in qpoly_terms(p)]


def qpoly_from_pairs(pairs: Sequence[Sequence[Any]]) -> QPoly:
    return qpoly_from_terms({int(e): parse_fraction(str(c)) for e, c in pairs})


def gpoly_to_pairs(terms: Dict[Vector, Fraction]) -> List[List[Any]]:
    """[[[exponent vector], "coefficient"], ...] in descending exponent order"""
    return [[list(m), format_fraction(c)] for m, c in sorted(terms.items(), reverse=True)]


def gpoly_from_pairs(pairs: Sequence[Sequence[Any]]) -> Dict[Vector, Fraction]:
    return {tuple(int(x) for x in m): parse_fraction(str(c)) for m, c in pairs}


def _monomial(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


def _join_terms(terms: List[tuple]) -> str:
    """terms: (coefficient, monomial string) pairs"""
    if not terms:
        return "0"
    pieces = []
    for index, (c, monomial) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{format_fraction(magnitude)}*{monomial}"
        else:
            body = format_fraction(magnitude)
        if index == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


def format_qpoly(p: QPoly, variable: str = "q") -> str:
    """'q^5 + q^3', '-1/2*q + 1', '0'"""
    return _join_terms([(c, _monomial(variable, e)) for e, c in qpoly_terms(p)])


def format_gpoly(terms: Dict[Vector, Fraction], names: Sequence[str]) -> str:
    ordered = sorted(terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]]))
    return _join_terms(
        [
            (c, "*".join(filter(None, (_monomial(v, e) for v, e in zip(names, m)))))
            for m, c in ordered
        ]
    )


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


# ==================== REPORT RENDERING ====================


def _display(value: Any) -> str:
    """Human rendering of one record value"""
    if isinstance(value, list) and value and all(
        isinstance(item, list) and len(item) == 2 for item in value
    ):
        if all(isinstance(item[0], int) for item in value):
            return format_qpoly(qpoly_from_pairs(value))
        if all(isinstance(item[0], list) for item in value):
            n = vertex_count(len(value[0][0]))
            names = [f"g{i + 1}{j + 1}" for i, j in edge_pairs(n)]
            return format_gpoly(gpoly_from_pairs(value), names)
    if isinstance(value, list):
        return "[" + ", ".join(_display(v) for v in value) + "]"
    if value is None:
        return ""
    return str(value)


def _check_rows(report: RunReport) -> List[Dict[str, Any]]:
    return [
        {
            "suite": check.suite,
            "check": check.name,
            "expected": check.expected,
            "actual": check.actual,
            "status": "boundary-" + ("pass" if check.passed else "fail")
            if check.boundary
            else ("pass" if check.passed else "fail"),
            "detail": check.detail or "",
        }
        for check in report.checks
    ]


def _render_table(rows: List[Dict[str, Any]], marker: bool = False) -> str:
    if not rows:
        return "(no rows)"
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = []
    for row in rows:
        line = []
        for key in columns:
            text = _display(row.get(key))
            if marker and key == "status":
                text = ("✅ " if text.endswith("pass") else "❌ ") + text.upper()
            line.append(text)
        cells.append(line)
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(columns)]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for line in cells:
        out.append("  ".join(t.ljust(w) for t, w in zip(line, widths)).rstrip())
    return "\n".join(out)


def render_table(report: RunReport) -> str:
    blocks = [f"$ {report.command}"]
    if report.records:
        blocks.append(_render_table(report.records))
    if report.checks:
        blocks.append(_render_table(_check_rows(report), marker=True))
        passed = sum(1 for c in report.checks if c.passed)
        blocks.append(f"{passed}/{len(report.checks)} checks passed")
    blocks.append(f"Completed in {report.wall_time:.2f}s")
    return "\n\n".join(blocks)


def render_json(report: RunReport) -> str:
    """JSON Lines: one record per line, then one line per check"""
    lines = [
        json.dumps({"type": "record", **record}, sort_keys=True, separators=(",", ":"))
        for record in report.records
    ]
    lines += [
        json.dumps({"type": "check", **row}, sort_keys=True, separators=(",", ":"))
        for row in _check_rows(report)
    ]
    return "\n".join(lines)


def render_csv(report: RunReport) -> str:
    """Records followed by check rows; nested values as compact JSON"""
    rows = list(report.records) + _check_rows(report)
    if not rows:
        return ""
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(
            [
                json.dumps(row[c], separators=(",", ":")) if isinstance(row.get(c), (list, dict)) else row.get(c, "")
                for c in columns
            ]
        )
    return buffer.getvalue().rstrip("\n")


def render(report: RunReport, fmt: str) -> str:
    if fmt == "table":
        return render_table(report)
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    raise ValueError(f"Invalid format '{fmt}'. Must be one of: {', '.join(FORMATS)}")
