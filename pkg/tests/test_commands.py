# tests/test_commands.py

import pytest

from src.commands import cmd_graphs, cmd_kac, cmd_leading, cmd_mahler, cmd_verify
from src.errors import SpecParseError
from src.state import Quiver


def test_cmd_kac():
    report = cmd_kac(Quiver.loops(2), (2,), s=1)
    record = report.records[0]
    assert record["polynomial"] == [[5, "1"], [3, "1"]]
    assert record["degree"] == 5
    assert record["derivatives"] == ["2", "8"]
    assert not report.failed


def test_cmd_kac_for_jordan_quiver():
    report = cmd_kac(Quiver.loops(1), (6,))
    assert report.records[0]["polynomial"] == [[1, "1"]]


def test_cmd_graphs_with_oracle():
    report = cmd_graphs(2, (2, 1), 3, oracle=True)
    assert {r["k"]: r["count"] for r in report.records} == {"0,2,0": 1, "1,1,0": 2, "1,2,0": 1}
    assert report.checks and not report.failed


def test_cmd_graphs_empty_table():
    assert cmd_graphs(1, (2,), 0).records == []


def test_cmd_graphs_checks_lengths():
    with pytest.raises(SpecParseError):
        cmd_graphs(2, (3,), 2)


def test_cmd_leading_with_fit():
    report = cmd_leading(1, (2,), 1, fit=True)
    assert report.records[0]["coefficient"] == "3"
    assert report.checks[0].passed


def test_cmd_leading_single_vertex_alpha_four():
    report = cmd_leading(1, (4,), 0)
    assert report.records[0]["coefficient"] == "16/3"


def test_cmd_mahler_with_derivative_checks():
    report = cmd_mahler(1, (2,), derivative=True)
    assert report.inputs["box"] == [4]
    assert [c.boundary for c in report.checks] == [True, False, False]
    assert report.checks[0].expected == "5" and report.checks[0].passed
    assert report.checks[1].expected == "12" and report.checks[1].passed


def test_cmd_mahler_checks_box_length():
    with pytest.raises(SpecParseError):
        cmd_mahler(2, (1, 1), bound=(3,))


def test_cmd_verify_runs_the_selected_suite():
    report = cmd_verify(["qbinom"], "quick")
    assert report.checks
    assert {c.suite for c in report.checks} == {"qbinom"}
    assert not report.failed
    assert report.inputs["passed"] == report.inputs["checks"]


def test_cmd_mahler_rejects_negative_box():
    with pytest.raises(SpecParseError):
        cmd_mahler(1, (1,), bound=(-1,))


def test_cmd_mahler_grows_a_zero_box():
    report = cmd_mahler(1, (1,), bound=(0,))
    assert report.inputs["box"] == [1]
    assert report.inputs["extensions"] == 1
