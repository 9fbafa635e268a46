# src/validation.py

from typing import Any, Dict, List, Sequence, Tuple

from langsmith import traceable

# ==================== SPEC SCHEMA ====================

ALLOWED_FIELDS = {"n", "edges", "name"}
REQUIRED_FIELDS = {"n": int}

REQUIRED_EDGE_FIELDS = ["i", "j", "multiplicity"]

MAX_VERTICES = 12  # edge vectors grow quadratically beyond this


# ==================== VALIDATION FUNCTIONS ====================
# Error messages start with the offending field path ("edges[2].j: ...") so
# the parser can point at the right line.


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_structure(data: Any) -> Tuple[bool, str]:
    """
    Validate the top-level document.

    Returns:
        (is_valid, error_message)
    """
    if not isinstance(data, dict):
        return False, f"document: expected a mapping, got {type(data).__name__}"

    unknown = sorted(set(data) - ALLOWED_FIELDS)
    if unknown:
        return False, f"{unknown[0]}: unknown field (allowed: {', '.join(sorted(ALLOWED_FIELDS))})"

    for field, expected_type in REQUIRED_FIELDS.items():
        if field not in data:
            return False, f"{field}: missing required field"
        if not _is_int(data[field]):
            return False, f"{field}: must be of type {expected_type.__name__}"

    if not 1 <= data["n"] <= MAX_VERTICES:
        return False, f"n: must lie in [1, {MAX_VERTICES}], got {data['n']}"

    if "edges" in data and data["edges"] is not None and not isinstance(data["edges"], list):
        return False, "edges: must be a list"

    if "name" in data and data["name"] is not None and not isinstance(data["name"], str):
        return False, "name: must be a string"

    return True, ""


def _check_edge(edge: Any, index: int, n: int) -> Tuple[bool, str]:
    """
    Validate one edge entry.

    Returns:
        (is_valid, error_message)
    """
    path = f"edges[{index}]"
    if not isinstance(edge, dict):
        return False, f"{path}: must be a mapping with keys i, j, multiplicity"

    for field in REQUIRED_EDGE_FIELDS:
        if field not in edge:
            return False, f"{path}.{field}: missing required field"
        if not _is_int(edge[field]):
            return False, f"{path}.{field}: must be an integer, got {edge[field]!r}"

    extra = sorted(set(edge) - set(REQUIRED_EDGE_FIELDS))
    if extra:
        return False, f"{path}.{extra[0]}: unknown field"

    for field in ("i", "j"):
        if not 1 <= edge[field] <= n:
            return False, f"{path}.{field}: vertex {edge[field]} outside [1, {n}]"

    if edge["multiplicity"] < 0:
        return False, f"{path}.multiplicity: must be >= 0, got {edge['multiplicity']}"

    return True, ""


def _check_duplicates(edges: List[Dict[str, int]]) -> Tuple[bool, str]:
    """
    Reject repeated vertex pairs; 1-2 and 2-1 are the same pair.

    Returns:
        (is_valid, error_message)
    """
    seen = {}
    for index, edge in enumerate(edges):
        pair = tuple(sorted((edge["i"], edge["j"])))
        if pair in seen:
            return (
                False,
                f"edges[{index}]: duplicate pair {pair[0]}-{pair[1]} (first at edges[{seen[pair]}])",
            )
        seen[pair] = index
    return True, ""


# ==================== MAIN VALIDATION FUNCTIONS ====================


@traceable(name="quiver_spec_validation")
def validate_quiver_spec(raw_input: Any) -> Tuple[bool, str, Dict[str, Any]]:
    """
    Validate a raw quiver specification before it becomes a QuiverSpec.

    Never raises.

    Returns:
        (is_valid, error_message, sanitized_data)
        - is_valid: True if the spec passes all checks
        - error_message: "<field path>: <problem>" (empty if valid)
        - sanitized_data: the spec with edges normalized to i <= j
    """
    is_valid, error = _check_structure(raw_input)
    if not is_valid:
        return False, error, {}

    n = raw_input["n"]
    edges = raw_input.get("edges") or []
    for index, edge in enumerate(edges):
        is_valid, error = _check_edge(edge, index, n)
        if not is_valid:
            return False, error, {}

    is_valid, error = _check_duplicates(edges)
    if not is_valid:
        return False, error, {}

    sanitized = {
        "n": n,
        "name": raw_input.get("name"),
        "edges": [
            {
                "i": min(edge["i"], edge["j"]),
                "j": max(edge["i"], edge["j"]),
                "multiplicity": edge["multiplicity"],
            }
            for edge in edges
        ],
    }
    return True, "", sanitized


def validate_dimension_vector(alpha: Sequence[int], n: int) -> Tuple[bool, str]:
    """
    Check that alpha is a nonzero, nonnegative vector of length n.

    Returns:
        (is_valid, error_message)
    """
    if len(alpha) != n:
        return False, f"alpha: expected {n} entries, got {len(alpha)}"
    if any(a < 0 for a in alpha):
        return False, f"alpha: entries must be >= 0, got {tuple(alpha)}"
    if not any(alpha):
        return False, "alpha: must be nonzero"
    return True, ""
