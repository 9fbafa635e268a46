#!/usr/bin/env python3
"""
Kac polynomials - command line interface

Computes Kac polynomials of quivers with Hua's formula, counts connected
multi-class graphs, and verifies the structure theorems for the derivatives
at q = 1 in the edge multiplicities.

    python main.py kac --loops 2 --alpha 2
    python main.py graphs --n 1 --ell 4 --budget 3 --oracle
    python main.py leading --n 1 --alpha 2 --s 1 --fit
    python main.py mahler --n 1 --alpha 2 --derivative
    python main.py verify --suite all --size quick
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

# Load environment variables (KACPOLY_* overrides, LangSmith key)
load_dotenv()

if os.getenv("LANGSMITH_API_KEY"):
    os.environ.setdefault("LANGCHAIN_TRACING_V2", "true")
    os.environ.setdefault("LANGCHAIN_PROJECT", "kac-polynomials")

from src.commands import cmd_graphs, cmd_kac, cmd_leading, cmd_mahler, cmd_verify  # noqa: E402
from src.config import DEFAULT_THREADS, LOG_LEVEL, SUITE_GRIDS, SUITE_NAMES, get_runtime_config  # noqa: E402
from src.errors import EXIT_OK, EXIT_VERIFICATION_FAILED, KacError, SpecParseError, exit_code_for  # noqa: E402
from src.nodes.parser import (  # noqa: E402
    load_quiver_file,
    parse_dimension_vector,
    parse_inline_quiver,
    parse_vector,
)
from src.report import FORMATS, render  # noqa: E402
from src.state import Quiver  # noqa: E402

logger = logging.getLogger("kacpoly")


# ==================== ARGUMENTS ====================


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table", help="Output format")
    common.add_argument(
        "--threads", type=int, default=DEFAULT_THREADS, help="Worker threads for grid sampling"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="kacpoly", description="Kac polynomials of quivers and their derivatives at q = 1"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    kac = commands.add_parser("kac", parents=[common], help="A(alpha, q) via Hua's formula")
    source = kac.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec", metavar="FILE", help="YAML quiver specification")
    source.add_argument("--quiver", metavar="TEXT", help="Inline quiver, e.g. 'n=2; 1-2:3, 1-1:1'")
    source.add_argument("--loops", type=int, metavar="G", help="One vertex with G loops")
    source.add_argument("--kronecker", type=int, metavar="G", help="Two vertices joined by G edges")
    kac.add_argument("--alpha", required=True, help="Dimension vector, e.g. '2' or '1,1'")
    kac.add_argument("--s", type=int, default=0, help="Also list derivatives 0..s at q = 1")

    graphs = commands.add_parser("graphs", parents=[common], help="Connected-graph counts G_k^l")
    graphs.add_argument("--n", type=int, required=True, help="Number of vertex classes")
    graphs.add_argument("--ell", required=True, help="Class sizes, e.g. '2,1'")
    graphs.add_argument("--budget", type=int, required=True, help="Maximum number of edges")
    graphs.add_argument("--oracle", action="store_true", help="Cross-check by brute force")

    leading = commands.add_parser(
        "leading", parents=[common], help="Leading component of the s-th derivative at q = 1"
    )
    leading.add_argument("--n", type=int, required=True, help="Number of vertices")
    leading.add_argument("--alpha", required=True, help="Dimension vector")
    leading.add_argument("--s", type=int, default=0, help="Derivative order")
    leading.add_argument("--fit", action="store_true", help="Compare with the interpolated polynomial")
    leading.add_argument("--degree-cap", type=int, default=None, help="Degree cap of the fit")

    mahler = commands.add_parser(
        "mahler", parents=[common], help="q-binomial expansion in the edge multiplicities"
    )
    mahler.add_argument("--n", type=int, required=True, help="Number of vertices")
    mahler.add_argument("--alpha", required=True, help="Dimension vector")
    mahler.add_argument("--box", default=None, help="Coefficient box, one entry per vertex pair")
    mahler.add_argument(
        "--derivative", action="store_true", help="Check the (q-1)-order law of the coefficients"
    )

    verify = commands.add_parser("verify", parents=[common], help="Run the verification suites")
    verify.add_argument(
        "--suite", choices=SUITE_NAMES + ["all"], action="append", help="Suite to run (repeatable)"
    )
    verify.add_argument("--size", choices=list(SUITE_GRIDS), default="quick", help="Grid size")

    return parser


def _resolve_quiver(args: argparse.Namespace) -> Quiver:
    if args.spec:
        return load_quiver_file(args.spec)
    if args.quiver:
        return parse_inline_quiver(args.quiver)
    if args.loops is not None:
        if args.loops < 0:
            raise SpecParseError(f"must be >= 0, got {args.loops}", field="loops")
        return Quiver.loops(args.loops)
    if args.kronecker < 0:
        raise SpecParseError(f"must be >= 0, got {args.kronecker}", field="kronecker")
    return Quiver.kronecker(args.kronecker)


def _suites(selected: Optional[List[str]]) -> List[str]:
    if not selected or "all" in selected:
        return list(SUITE_NAMES)
    return list(dict.fromkeys(selected))


# ==================== DISPATCH ====================


def run_command(args: argparse.Namespace, echo: str):
    if args.threads < 1:
        raise SpecParseError(f"must be >= 1, got {args.threads}", field="threads")

    if args.command == "kac":
        quiver = _resolve_quiver(args)
        alpha = parse_dimension_vector(args.alpha, quiver.n)
        return cmd_kac(quiver, alpha, args.s, command=echo)

    if args.command == "graphs":
        return cmd_graphs(
            args.n, parse_vector(args.ell, "ell"), args.budget, args.oracle, args.threads, command=echo
        )

    if args.command == "leading":
        alpha = parse_dimension_vector(args.alpha, args.n)
        return cmd_leading(args.n, alpha, args.s, args.fit, args.degree_cap, args.threads, command=echo)

    if args.command == "mahler":
        alpha = parse_dimension_vector(args.alpha, args.n)
        bound = parse_vector(args.box, "box") if args.box else None
        return cmd_mahler(args.n, alpha, bound, args.derivative, args.threads, command=echo)

    return cmd_verify(_suites(args.suite), args.size, args.threads, command=echo)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)

    level = {0: LOG_LEVEL, 1: "INFO"}.get(args.verbose, "DEBUG")
    logging.basicConfig(
        level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    logger.debug("Runtime config: %s", get_runtime_config())

    try:
        report = run_command(args, " ".join(["kacpoly", *argv]))
    except (KacError, ValueError, ZeroDivisionError) as e:
        code = exit_code_for(e)
        print(f"❌ Error: {e}", file=sys.stderr)
        logger.debug("Command failed with exit code %d", code, exc_info=True)
        return code

    print(render(report, args.format))
    if report.failed:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
