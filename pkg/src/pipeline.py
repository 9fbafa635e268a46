# src/pipeline.py

from typing import Any, Dict, List, Sequence, Tuple

from langgraph.graph import END, StateGraph

from .config import SUITE_NAMES
from .nodes.parser import plan_verification
from .nodes.suite_graphs import run_graphs_suite
from .nodes.suite_mahler import run_mahler_suite
from .nodes.suite_qbinom import run_qbinom_suite
from .nodes.suite_tables import run_tables_suite
from .nodes.suite_theorems import run_theorems_suite
from .nodes.summarizer import canonical_order, summarize_results
from .state import CheckResult, VerifyState

SUITE_NODES = {
    "tables": run_tables_suite,
    "graphs": run_graphs_suite,
    "qbinom": run_qbinom_suite,
    "mahler": run_mahler_suite,
    "theorems": run_theorems_suite,
}

assert set(SUITE_NODES) == set(SUITE_NAMES), "Every suite needs a node"


def create_verify_graph(suites: Sequence[str]) -> StateGraph:
    """
    Create the verification graph with the selected suites in parallel.

    Graph structure:
                               Plan
                                 ↓
            ┌─────────┬──────────┼──────────┬──────────┐
            ↓         ↓          ↓          ↓          ↓
         tables    graphs     qbinom     mahler    theorems
            ↓         ↓          ↓          ↓          ↓
            └─────────┴──────────┼──────────┴──────────┘
                                 ↓
                             Summarizer
                                 ↓
                                END

    Only the requested suites get a node. Unknown names are rejected by the
    plan node when the graph runs.
    """
    graph_builder = StateGraph(VerifyState)

    graph_builder.add_node("plan", plan_verification)
    graph_builder.add_node("summarizer", summarize_results)

    selected = [suite for suite in dict.fromkeys(suites) if suite in SUITE_NODES]
    for suite in selected:
        graph_builder.add_node(suite, SUITE_NODES[suite])
        graph_builder.add_edge("plan", suite)
        graph_builder.add_edge(suite, "summarizer")
    if not selected:
        graph_builder.add_edge("plan", "summarizer")

    graph_builder.add_edge("summarizer", END)
    graph_builder.set_entry_point("plan")

    return graph_builder


def compile_verify_graph(suites: Sequence[str]):
    return create_verify_graph(suites).compile()


def run_verification(
    suites: List[str], size: str = "quick", threads: int = 1
) -> Tuple[List[CheckResult], Dict[str, Any]]:
    """Run the graph and return (checks in canonical order, summary)"""
    graph = compile_verify_graph(suites)
    final_state = graph.invoke(
        {
            "size": size,
            "suites": list(suites),
            "grid": {},
            "threads": threads,
            "results": [],
            "summary": None,
        }
    )
    return canonical_order(final_state["results"], suites), final_state["summary"]
