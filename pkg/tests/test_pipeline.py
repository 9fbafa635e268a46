# tests/test_pipeline.py

import pytest

from src.config import get_suite_config
from src.errors import SpecParseError
from src.nodes.suite_qbinom import run_qbinom_suite
from src.nodes.summarizer import canonical_order, summarize_results
from src.pipeline import create_verify_graph, run_verification
from src.state import CheckResult


def _check(suite, passed=True, boundary=False):
    return CheckResult(
        suite=suite, name="x", expected="1", actual="1" if passed else "0", passed=passed, boundary=boundary
    )


def test_graph_has_one_node_per_selected_suite():
    builder = create_verify_graph(["qbinom", "graphs", "qbinom"])
    assert set(builder.nodes) == {"plan", "qbinom", "graphs", "summarizer"}


def test_summarizer_counts_boundary_cases_separately():
    state = {
        "suites": ["graphs", "mahler"],
        "results": [_check("mahler", boundary=True), _check("graphs"), _check("mahler", passed=False)],
    }
    summary = summarize_results(state)["summary"]
    assert summary["checks"] == 2
    assert summary["passed"] == 1
    assert summary["boundary_checks"] == 1
    assert summary["boundary_passed"] == 1
    assert summary["per_suite"] == {"graphs": "1/1", "mahler": "1/2"}


def test_canonical_order_follows_requested_suites():
    results = [_check("mahler"), _check("graphs")]
    assert [r.suite for r in canonical_order(results, ["graphs", "mahler"])] == ["graphs", "mahler"]


def test_run_verification():
    results, summary = run_verification(["qbinom"], "quick")
    assert {r.suite for r in results} == {"qbinom"}
    assert summary["per_suite"] == {"qbinom": f"{len(results)}/{len(results)}"}
    assert all(r.passed for r in results)


def test_unknown_suite_is_rejected():
    with pytest.raises(SpecParseError):
        run_verification(["nope"], "quick")


def test_qbinom_suite_covers_the_full_square_of_derivative_laws():
    results = run_qbinom_suite({"grid": get_suite_config("quick")})["results"]
    names = {r.name for r in results}
    assert {"qbinom derivative k=0 t=0", "qbinom derivative k=0 t=3", "qbinom derivative k=3 t=3"} <= names
    assert all(r.passed for r in results)


def test_full_grid_reaches_the_single_vertex_targets():
    grid = get_suite_config("full")
    assert grid["qbinom_max_kt"] == 5
    assert grid["theorem_single_max_alpha"] == 6
    assert grid["theorem_closed_form_max_alpha"] == 7
