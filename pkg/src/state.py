# src/state.py

import operator
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional, Tuple, TypedDict

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .vectors import Vector, edge_count, edge_index, edge_pairs, norm

"""
Defines the data structures of the Kac polynomial toolkit.
It has the pydantic models and the TypedDict for the verification graph state.
"""


# ==================== QUIVERS ====================


class Quiver(BaseModel):
    """
    A quiver up to orientation: n vertices and the symmetric edge
    multiplicities g_ij for i <= j, stored in edge-vector order
    (11, 12, ..., 1n, 22, ...). g_ii counts the loops at vertex i.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of vertices")
    g: Tuple[int, ...] = Field(description="Edge multiplicities in edge-vector order")
    name: Optional[str] = Field(
        default=None, description="Human-readable label, ignored by equality"
    )

    @model_validator(mode="after")
    def _check_table(self) -> "Quiver":
        if len(self.g) != edge_count(self.n):
            raise ValueError(
                f"Quiver with n={self.n} needs {edge_count(self.n)} multiplicities, got {len(self.g)}"
            )
        if any(x < 0 for x in self.g):
            raise ValueError(f"Edge multiplicities must be >= 0, got {self.g}")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.n == other.n and self.g == other.g

    def __hash__(self) -> int:
        return hash((self.n, self.g))

    def multiplicity(self, i: int, j: int) -> int:
        """g_ij with 0-based vertex indices"""
        return self.g[edge_index(self.n, i, j)]

    @classmethod
    def loops(cls, g: int) -> "Quiver":
        """S_g: one vertex with g loops"""
        return cls(n=1, g=(g,), name=f"S_{g}")

    @classmethod
    def kronecker(cls, g: int) -> "Quiver":
        """Two vertices joined by g arrows, no loops"""
        return cls(n=2, g=(0, g, 0), name=f"K_{g}")

    @classmethod
    def from_multiplicities(cls, n: int, g: Vector, name: Optional[str] = None) -> "Quiver":
        return cls(n=n, g=tuple(g), name=name)

    def permuted(self, perm: Tuple[int, ...]) -> "Quiver":
        """Relabel vertex i as perm[i]"""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of range({self.n})")
        g = [0] * len(self.g)
        for (i, j), value in zip(edge_pairs(self.n), self.g):
            g[edge_index(self.n, perm[i], perm[j])] = value
        return Quiver(n=self.n, g=tuple(g), name=self.name)

    def describe(self) -> str:
        edges = ", ".join(
            f"{i + 1}-{j + 1}:{m}" for (i, j), m in zip(edge_pairs(self.n), self.g) if m
        )
        return f"n={self.n}; {edges}" if edges else f"n={self.n}"


class EdgeSpec(BaseModel):
    """One edge line of a quiver specification, 1-based vertices"""

    i: int = Field(ge=1, description="First vertex (1-based)")
    j: int = Field(ge=1, description="Second vertex (1-based), i <= j after normalization")
    multiplicity: int = Field(ge=0, description="Number of edges between i and j")

    @model_validator(mode="after")
    def _order(self) -> "EdgeSpec":
        if self.i > self.j:
            self.i, self.j = self.j, self.i
        return self


class QuiverSpec(BaseModel):
    """A validated quiver specification as read from YAML or the inline syntax"""

    n: int = Field(ge=1, description="Number of vertices")
    edges: List[EdgeSpec] = Field(
        default_factory=list, description="Edge list; unlisted pairs default to 0"
    )
    name: Optional[str] = Field(default=None, description="Optional quiver name")

    @model_validator(mode="after")
    def _check_edges(self) -> "QuiverSpec":
        seen = set()
        for edge in self.edges:
            if edge.j > self.n:
                raise ValueError(f"Edge {edge.i}-{edge.j} references a vertex > n={self.n}")
            if (edge.i, edge.j) in seen:
                raise ValueError(f"Duplicate edge pair {edge.i}-{edge.j}")
            seen.add((edge.i, edge.j))
        return self

    def to_quiver(self) -> Quiver:
        g = [0] * edge_count(self.n)
        for edge in self.edges:
            g[edge_index(self.n, edge.i - 1, edge.j - 1)] = edge.multiplicity
        return Quiver(n=self.n, g=tuple(g), name=self.name)


# ==================== RESULT TABLES ====================


class GraphCountTable(BaseModel):
    """Connected-graph counts G_k^l for one vertex-class vector l"""

    model_config = ConfigDict(frozen=True)

    ell: Tuple[int, ...] = Field(description="Vertex class sizes")
    counts: Dict[Tuple[int, ...], int] = Field(
        default_factory=dict, description="Edge vector k -> G_k^l, nonzero entries only"
    )
    edge_budget: int = Field(ge=0, description="Cap on |k|")

    @field_validator("counts")
    @classmethod
    def _drop_zeros(cls, counts: Dict[Tuple[int, ...], int]) -> Dict[Tuple[int, ...], int]:
        return {tuple(k): v for k, v in sorted(counts.items()) if v}

    def count(self, k: Vector) -> int:
        return self.counts.get(tuple(k), 0)


class LeadingComponent(BaseModel):
    """Top homogeneous component of the s-th derivative at q = 1, in the g_ij"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: Tuple[int, ...] = Field(description="Dimension vector")
    s: int = Field(ge=0, description="Derivative order")
    terms: Dict[Tuple[int, ...], Fraction] = Field(
        default_factory=dict,
        description="Exponent vector l (|l| = s + |alpha| - 1) -> coefficient of g^l",
    )

    @model_validator(mode="after")
    def _check_degree(self) -> "LeadingComponent":
        degree = self.s + norm(self.alpha) - 1
        for ell in self.terms:
            if norm(ell) != degree:
                raise ValueError(f"Term {ell} does not have total degree {degree}")
        return self

    @property
    def degree(self) -> int:
        return self.s + norm(self.alpha) - 1


class MahlerTable(BaseModel):
    """Coefficients a(alpha, k, q) of the q-binomial expansion of A(alpha, q)"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1, description="Number of vertices")
    alpha: Tuple[int, ...] = Field(description="Dimension vector")
    box: Tuple[int, ...] = Field(description="Cap on every index k")
    coeffs: Dict[Tuple[int, ...], Any] = Field(
        default_factory=dict, description="Edge vector k -> QPoly a(alpha, k, q), nonzero only"
    )
    extensions: int = Field(default=0, description="Box doublings needed for reconstruction")


# ==================== REPORTS ====================


class CheckResult(BaseModel):
    """One verified item: expected vs actual"""

    suite: str = Field(description="Suite that produced the check")
    name: str = Field(description="Short identifier of the checked item")
    expected: str = Field(description="Expected value, serialized")
    actual: str = Field(description="Computed value, serialized")
    passed: bool = Field(description="True if expected == actual")
    boundary: bool = Field(
        default=False, description="True for boundary cases reported separately"
    )
    detail: Optional[str] = Field(default=None, description="Error message, if any")


class RunReport(BaseModel):
    """Everything a CLI command emits"""

    command: str = Field(description="Echo of the command line")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Parsed inputs")
    records: List[Dict[str, Any]] = Field(
        default_factory=list, description="Output rows, one dict per record"
    )
    checks: List[CheckResult] = Field(default_factory=list, description="Verification items")
    wall_time: float = Field(default=0.0, description="Seconds elapsed")

    @property
    def failed(self) -> bool:
        """Any regular check failed; boundary cases do not count"""
        return any(not check.passed and not check.boundary for check in self.checks)


# ==================== GRAPH STATE ====================


class VerifyState(TypedDict):
    """Shared state of the verification graph"""

    size: str  # "quick" or "full"
    suites: List[str]
    grid: Dict[str, Any]
    threads: int
    results: Annotated[List[CheckResult], operator.add]
    summary: Optional[Dict[str, Any]]
