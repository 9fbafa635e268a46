# src/config.py

"""
Configuration parameters for the Kac polynomial toolkit.

Adjust these values to tune the computations and the verification suites:
- Guards: Size limits for the brute-force oracles
- Mahler: Default box size and how often the box may be extended
- Suites: The parameter grids each verification suite walks through

Every value can be overridden with an environment variable of the same
name prefixed by KACPOLY_ (a .env file is read by main.py).
"""

import os


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(f"KACPOLY_{name}", default))


# ==================== ORACLE GUARDS ====================

BRUTEFORCE_EDGE_LIMIT = _env_int("BRUTEFORCE_EDGE_LIMIT", 24)  # max possible edges
SET_PARTITION_LIMIT = _env_int("SET_PARTITION_LIMIT", 8)  # max |bound| for Bell sums


# ==================== MAHLER EXPANSION ====================

MAHLER_S_MAX = _env_int("MAHLER_S_MAX", 2)  # default box entries = |alpha| + s_max
MAHLER_SPOT_CHECKS = _env_int("MAHLER_SPOT_CHECKS", 3)  # out-of-box reconstruction points
MAHLER_MAX_EXTENSIONS = _env_int("MAHLER_MAX_EXTENSIONS", 3)  # box doublings before giving up

assert MAHLER_SPOT_CHECKS >= 1, "At least one out-of-box spot check is required"


# ==================== RUNTIME ====================

DEFAULT_THREADS = _env_int("THREADS", 1)  # sequential unless asked otherwise
LOG_LEVEL = os.getenv("KACPOLY_LOG_LEVEL", "WARNING")

assert DEFAULT_THREADS >= 1, "Thread count must be positive"


# ==================== VERIFICATION SUITES ====================
# Grids walked by `main.py verify`. "quick" is meant to finish in seconds,
# "full" is the complete acceptance matrix.

SUITE_GRIDS = {
    "quick": {
        "table1_max_alpha": 3,
        "table1_max_g": 3,
        "table2_max_alpha": 4,
        "table2_max_g": 4,
        "table3_max_alpha": 4,
        "graphs_max_n": 2,
        "graphs_max_size": 4,
        "cayley_max": 6,
        "expformula_max_size": 4,
        "qbinom_max_kt": 3,
        "ratio_max_im": 3,
        "stirling_max_k": 3,
        "mahler_max_alpha": 2,
        "mahler_max_g": 6,
        "mahler_derivative_alphas": [2],
        "theorem_single_max_alpha": 4,
        "theorem_single_max_s": 1,
        "theorem_closed_form_max_alpha": 5,
        "theorem_pair_max_size": 2,
        "theorem_pair_max_s": 1,
    },
    "full": {
        "table1_max_alpha": 6,
        "table1_max_g": 4,
        "table2_max_alpha": 6,
        "table2_max_g": 6,
        "table3_max_alpha": 6,
        "graphs_max_n": 3,
        "graphs_max_size": 5,
        "cayley_max": 7,
        "expformula_max_size": 6,
        "qbinom_max_kt": 5,
        "ratio_max_im": 4,
        "stirling_max_k": 5,
        "mahler_max_alpha": 5,
        "mahler_max_g": 8,
        "mahler_derivative_alphas": [2, 3],
        "theorem_single_max_alpha": 6,
        "theorem_single_max_s": 2,
        "theorem_closed_form_max_alpha": 7,
        "theorem_pair_max_size": 4,
        "theorem_pair_max_s": 1,
    },
}

SUITE_NAMES = ["tables", "graphs", "qbinom", "mahler", "theorems"]

assert SUITE_GRIDS["quick"].keys() == SUITE_GRIDS["full"].keys(), (
    "Quick and full grids must define the same parameters"
)


# ==================== HELPER FUNCTIONS ====================


def get_suite_config(size: str) -> dict:
    """Get the parameter grid for a suite size ("quick" or "full")"""
    if size not in SUITE_GRIDS:
        raise ValueError(
            f"Invalid suite size '{size}'. Must be one of: {', '.join(SUITE_GRIDS)}"
        )
    return dict(SUITE_GRIDS[size])


def get_runtime_config() -> dict:
    """Get guards and defaults as a dictionary, for report headers"""
    return {
        "bruteforce_edge_limit": BRUTEFORCE_EDGE_LIMIT,
        "set_partition_limit": SET_PARTITION_LIMIT,
        "mahler_s_max": MAHLER_S_MAX,
        "mahler_spot_checks": MAHLER_SPOT_CHECKS,
        "mahler_max_extensions": MAHLER_MAX_EXTENSIONS,
        "threads": DEFAULT_THREADS,
    }
