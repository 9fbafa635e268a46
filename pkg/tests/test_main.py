# tests/test_main.py

import json
from pathlib import Path

import pytest

from main import main

DATA = Path(__file__).resolve().parent.parent / "data"


def test_kac_table_output(capsys):
    assert main(["kac", "--spec", str(DATA / "loops_s2.yaml"), "--alpha", "2"]) == 0
    assert "q^5 + q^3" in capsys.readouterr().out


def test_kac_json_output(capsys):
    assert main(["kac", "--loops", "3", "--alpha", "2", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out.splitlines()[0])
    assert record["polynomial"] == [[9, "1"], [7, "1"], [5, "1"]]


def test_inline_quiver(capsys):
    assert main(["kac", "--quiver", "n=2; 1-2:2", "--alpha", "1,1", "--format", "csv"]) == 0
    assert "quiver" in capsys.readouterr().out.splitlines()[0]


@pytest.mark.parametrize(
    "argv",
    [
        ["kac", "--loops", "1", "--alpha", "1,1"],
        ["kac", "--quiver", "n=2; 1-3:1", "--alpha", "1,1"],
        ["kac", "--loops", "-1", "--alpha", "1"],
        ["graphs", "--n", "1", "--ell", "9", "--budget", "2", "--oracle"],
        ["leading", "--n", "1", "--alpha", "2", "--threads", "0"],
    ],
)
def test_input_errors_exit_with_2(argv, capsys):
    assert main(argv) == 2
    assert "Error" in capsys.readouterr().err


def test_graphs_with_oracle(capsys):
    assert main(["graphs", "--n", "1", "--ell", "4", "--budget", "3", "--oracle"]) == 0
    assert "checks passed" in capsys.readouterr().out


def test_verify(capsys):
    assert main(["verify", "--suite", "qbinom", "--format", "json"]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert lines and all(line["status"] == "pass" for line in lines)
