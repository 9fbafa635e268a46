# tests/test_report.py

import json
from fractions import Fraction

import pytest

from src.arith import Q, qpoly_from_terms
from src.report import (
    format_fraction,
    format_gpoly,
    format_qpoly,
    gpoly_from_pairs,
    gpoly_to_pairs,
    qpoly_from_pairs,
    qpoly_to_pairs,
    render,
    render_csv,
    render_json,
    render_table,
)
from src.state import CheckResult, RunReport


def _report() -> RunReport:
    return RunReport(
        command="kacpoly kac --loops 2 --alpha 2",
        records=[{"alpha": "2", "polynomial": qpoly_to_pairs(Q**5 + Q**3)}],
        checks=[
            CheckResult(suite="tables", name="A(S_2, 2, q)", expected="q^5 + q^3", actual="q^5 + q^3", passed=True),
            CheckResult(suite="mahler", name="k=2", expected="5", actual="4", passed=False, boundary=True),
        ],
        wall_time=0.5,
    )


def test_format_fraction():
    assert format_fraction(Fraction(-1, 2)) == "-1/2"
    assert format_fraction(3) == "3"


def test_format_qpoly():
    assert format_qpoly(Q**5 + Q**3) == "q^5 + q^3"
    assert format_qpoly(qpoly_from_terms({1: Fraction(-1, 2), 0: 1})) == "-1/2*q + 1"
    assert format_qpoly(qpoly_from_terms({})) == "0"
    assert format_qpoly(qpoly_from_terms({0: 3})) == "3"


def test_polynomial_pairs():
    pairs = qpoly_to_pairs(Q**5 - 2 * Q)
    assert pairs == [[5, "1"], [1, "-2"]]
    assert qpoly_from_pairs(pairs) == Q**5 - 2 * Q
    terms = {(2, 0, 1): Fraction(1, 3)}
    assert gpoly_to_pairs(terms) == [[[2, 0, 1], "1/3"]]
    assert gpoly_from_pairs(gpoly_to_pairs(terms)) == terms


def test_format_gpoly():
    assert format_gpoly({(2,): Fraction(3), (1,): Fraction(-2)}, ["g"]) == "3*g^2 - 2*g"
    assert format_gpoly({(1, 1, 0): Fraction(1)}, ["g11", "g12", "g22"]) == "g11*g12"


def test_render_json_lines():
    lines = [json.loads(line) for line in render_json(_report()).splitlines()]
    assert lines[0]["type"] == "record"
    assert lines[0]["polynomial"] == [[5, "1"], [3, "1"]]
    assert [line["status"] for line in lines[1:]] == ["pass", "boundary-fail"]


def test_render_csv():
    text = render_csv(_report())
    header = text.splitlines()[0].split(",")
    assert header[:2] == ["alpha", "polynomial"]
    assert "boundary-fail" in text


def test_render_table():
    text = render_table(_report())
    assert text.startswith("$ kacpoly kac --loops 2 --alpha 2")
    assert "q^5 + q^3" in text
    assert "✅ PASS" in text
    assert "❌ BOUNDARY-FAIL" in text
    assert "1/2 checks passed" in text


def test_table_shows_fitted_polynomials():
    report = RunReport(command="fit", records=[{"fit": [[[2], "3"], [[1], "-2"]]}])
    assert "3*g11^2 - 2*g11" in render_table(report)


def test_unknown_format():
    with pytest.raises(ValueError):
        render(_report(), "xml")
