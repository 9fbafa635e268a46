# tests/test_state.py

import pytest
from pydantic import ValidationError

from src.state import CheckResult, EdgeSpec, GraphCountTable, Quiver, QuiverSpec, RunReport


def test_quiver_shortcuts():
    assert Quiver.loops(2).g == (2,)
    assert Quiver.kronecker(3).g == (0, 3, 0)
    assert Quiver.kronecker(3).describe() == "n=2; 1-2:3"
    assert Quiver.from_multiplicities(1, (0,)).describe() == "n=1"


def test_quiver_equality_ignores_name():
    assert Quiver.loops(2) == Quiver(n=1, g=(2,), name="other")
    assert hash(Quiver.loops(2)) == hash(Quiver(n=1, g=(2,)))


def test_quiver_validation():
    with pytest.raises(ValidationError):
        Quiver(n=2, g=(1, 2))
    with pytest.raises(ValidationError):
        Quiver(n=1, g=(-1,))


def test_permuted():
    quiver = Quiver.from_multiplicities(2, (1, 2, 0))
    assert quiver.permuted((1, 0)).g == (0, 2, 1)
    assert quiver.multiplicity(1, 0) == 2
    with pytest.raises(ValueError):
        quiver.permuted((0, 0))


def test_edge_spec_is_normalized():
    edge = EdgeSpec(i=3, j=1, multiplicity=2)
    assert (edge.i, edge.j) == (1, 3)


def test_quiver_spec():
    spec = QuiverSpec(n=2, edges=[EdgeSpec(i=1, j=2, multiplicity=3), EdgeSpec(i=1, j=1, multiplicity=1)])
    assert spec.to_quiver().g == (1, 3, 0)
    with pytest.raises(ValidationError):
        QuiverSpec(n=2, edges=[EdgeSpec(i=1, j=2, multiplicity=1), EdgeSpec(i=2, j=1, multiplicity=1)])
    with pytest.raises(ValidationError):
        QuiverSpec(n=1, edges=[EdgeSpec(i=1, j=2, multiplicity=1)])


def test_graph_count_table_drops_zeros():
    table = GraphCountTable(ell=(3,), counts={(3,): 1, (1,): 0, (2,): 3}, edge_budget=3)
    assert table.counts == {(2,): 3, (3,): 1}
    assert table.count((1,)) == 0


def test_boundary_failures_do_not_fail_a_run():
    def check(passed, boundary):
        return CheckResult(
            suite="mahler", name="k", expected="1", actual="1" if passed else "0",
            passed=passed, boundary=boundary,
        )

    assert not RunReport(command="mahler", checks=[check(True, False), check(False, True)]).failed
    assert RunReport(command="mahler", checks=[check(False, False), check(True, True)]).failed
