# src/nodes/parser.py

import logging
import re
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml
from pydantic import ValidationError

from ..config import SUITE_NAMES, get_suite_config
from ..errors import SpecParseError
from ..state import Quiver, QuiverSpec, VerifyState
from ..validation import validate_dimension_vector, validate_quiver_spec

logger = logging.getLogger(__name__)

_PATH_TOKEN = re.compile(r"([A-Za-z_]\w*)|\[(\d+)\]")
_INLINE_EDGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*:\s*(\d+)\s*$")


# ==================== QUIVER SPECIFICATIONS ====================


def _line_of(text: str, path: str) -> Optional[int]:
    """1-based line of the YAML node addressed by a path like 'edges[2].j'"""
    try:
        node = yaml.compose(text)
    except yaml.YAMLError:
        return None
    if node is None:
        return None
    line = node.start_mark.line + 1
    for key, index in _PATH_TOKEN.findall(path):
        if isinstance(node, yaml.MappingNode) and key:
            matches = [v for k, v in node.value if k.value == key]
            if not matches:
                return line
            node = matches[0]
        elif isinstance(node, yaml.SequenceNode) and index:
            position = int(index)
            if position >= len(node.value):
                return line
            node = node.value[position]
        else:
            return line
        line = node.start_mark.line + 1
    return line


def _spec_error(message: str, line: Optional[int]) -> SpecParseError:
    field, _, problem = message.partition(": ")
    return SpecParseError(problem or message, line=line, field=field if problem else None)


def parse_quiver_spec(text: str) -> Quiver:
    """
    Parse a YAML quiver specification:

        name: S_2
        n: 1
        edges:
          - {i: 1, j: 1, multiplicity: 2}
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise SpecParseError(
            f"Invalid YAML format: {getattr(e, 'problem', None) or e}",
            line=mark.line + 1 if mark is not None else None,
        ) from e

    is_valid, error_message, sanitized = validate_quiver_spec(raw)
    if not is_valid:
        field = error_message.partition(": ")[0]
        raise _spec_error(error_message, _line_of(text, field))

    try:
        spec = QuiverSpec(**sanitized)
    except ValidationError as e:
        raise SpecParseError(f"Failed to parse quiver spec: {e}") from e
    logger.debug("Parsed quiver spec %s", spec)
    return spec.to_quiver()


def load_quiver_file(path: str | Path) -> Quiver:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecParseError(f"Cannot read spec file {path}: {e.strerror}") from e
    return parse_quiver_spec(text)


def parse_inline_quiver(text: str) -> Quiver:
    """Parse the one-line syntax 'n=2; 1-2:3, 1-1:1'"""
    head, _, tail = text.partition(";")
    key, _, value = head.partition("=")
    if key.strip() != "n" or not value.strip().isdigit():
        raise SpecParseError(f"expected 'n=<int>' before ';', got {head.strip()!r}", line=1, field="n")
    edges = []
    for index, chunk in enumerate(c for c in tail.split(",") if c.strip()):
        match = _INLINE_EDGE.match(chunk)
        if not match:
            raise SpecParseError(
                f"expected 'i-j:multiplicity', got {chunk.strip()!r}", line=1, field=f"edges[{index}]"
            )
        i, j, m = map(int, match.groups())
        edges.append({"i": i, "j": j, "multiplicity": m})

    is_valid, error_message, sanitized = validate_quiver_spec({"n": int(value), "edges": edges})
    if not is_valid:
        raise _spec_error(error_message, 1)
    return QuiverSpec(**sanitized).to_quiver()


def parse_vector(text: str, name: str = "alpha") -> Tuple[int, ...]:
    """'2' -> (2,), '1,1' -> (1, 1)"""
    parts = text.split(",")
    if not all(part.strip() for part in parts):
        raise SpecParseError(f"empty entry in {text!r}", field=name)
    try:
        return tuple(int(part) for part in parts)
    except ValueError as e:
        raise SpecParseError(f"expected comma-separated integers, got {text!r}", field=name) from e


def parse_dimension_vector(text: str, n: int) -> Tuple[int, ...]:
    alpha = parse_vector(text, "alpha")
    is_valid, error_message = validate_dimension_vector(alpha, n)
    if not is_valid:
        raise _spec_error(error_message, None)
    return alpha


# ==================== VERIFICATION REQUEST ====================


def plan_verification(state: VerifyState) -> Dict[str, Any]:
    """
    Entry node of the verification graph.

    Resolves the suite grid for the requested size; unknown suites are
    rejected before any suite node runs.
    """
    unknown = [s for s in state["suites"] if s not in SUITE_NAMES]
    if unknown:
        raise SpecParseError(
            f"unknown suite {unknown[0]!r}, expected one of {', '.join(SUITE_NAMES)}",
            field="suite",
        )
    grid = get_suite_config(state["size"])
    logger.info("Running suites %s with the %s grid", ", ".join(state["suites"]), state["size"])
    return {"grid": grid}
