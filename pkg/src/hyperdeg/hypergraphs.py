"""Incidence-matrix and edge-list views of uniform hypergraphs, and the
degree-sequence realization entry point."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .feasibility import (
    Feasibility,
    RegularInstance,
    check_degree_sequence,
)
from .reconstruct import rec_regular, rec_span_one
from .words import BinaryMatrix

__all__ = [
    "Hypergraph",
    "RealizationResult",
    "degree_sequence",
    "from_incidence",
    "realize",
    "to_incidence",
]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus an ordered list of pairwise distinct, equal-size
    edges; vertices are 1-based."""

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        normalized = tuple(tuple(sorted(edge)) for edge in self.edges)
        object.__setattr__(self, "edges", normalized)
        if len({len(e) for e in normalized}) > 1:
            raise ValueError("all edges must have the same size")
        for edge in normalized:
            if not edge:
                raise ValueError("edges must be nonempty")
            if len(set(edge)) != len(edge):
                raise ValueError(f"edge repeats a vertex: {edge}")
            if edge[0] < 1 or edge[-1] > self.n:
                raise ValueError(f"vertex index out of range in edge {edge}")
        if len(set(normalized)) != len(normalized):
            raise ValueError("parallel edges are not allowed")

    @property
    def edge_size(self) -> int:
        return len(self.edges[0]) if self.edges else 0

    def to_edges_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in edge) for edge in self.edges)

    def to_json_dict(self, edge_size: int | None = None) -> dict:
        h = self.edge_size or (edge_size or 0)
        return {"n": self.n, "h": h, "edges": [list(edge) for edge in self.edges]}


def from_incidence(matrix: BinaryMatrix) -> Hypergraph:
    """Read each row as an edge over the 1-based column indices of its ones.
    Duplicate rows are rejected since they would create parallel edges."""
    if len(set(matrix.rows)) != matrix.nrows:
        raise ValueError("duplicate rows would create parallel edges")
    edges = tuple(
        tuple(j + 1 for j, ch in enumerate(row) if ch == "1") for row in matrix.rows
    )
    return Hypergraph(matrix.ncols, edges)


def to_incidence(hypergraph: Hypergraph) -> BinaryMatrix:
    """Inverse of from_incidence; row order follows edge order."""
    rows = tuple(
        "".join("1" if j in members else "0" for j in range(1, hypergraph.n + 1))
        for members in (set(edge) for edge in hypergraph.edges)
    )
    return BinaryMatrix(rows, hypergraph.n)


def degree_sequence(hypergraph: Hypergraph) -> tuple[int, ...]:
    """Vertex degrees sorted nonincreasingly."""
    counts = [0] * hypergraph.n
    for edge in hypergraph.edges:
        for vertex in edge:
            counts[vertex - 1] += 1
    return tuple(sorted(counts, reverse=True))


@dataclass(frozen=True)
class RealizationResult:
    """Exactly one of: a realized hypergraph, an infeasibility verdict, or an
    unsupported-class report."""

    status: str  # realized | infeasible | unsupported
    hypergraph: Hypergraph | None = None
    feasibility: Feasibility | None = None
    reason: str | None = None


def realize(degrees: Iterable[int] | Sequence[int], h: int) -> RealizationResult:
    """Realize a degree sequence as an h-uniform hypergraph without parallel
    edges. Supported shapes are regular and span-one sequences; the input is
    sorted nonincreasingly before classification."""
    if h < 1:
        raise ValueError("edge size must be positive")
    values = tuple(sorted((int(d) for d in degrees), reverse=True))
    check = check_degree_sequence(values, h)
    if check.kind == "unsupported":
        return RealizationResult("unsupported", reason="span>1")
    assert check.result is not None
    if not check.result.feasible:
        return RealizationResult("infeasible", feasibility=check.result)
    instance = check.instance
    if isinstance(instance, RegularInstance):
        matrix = rec_regular(instance)
    else:
        matrix = rec_span_one(instance)
    return RealizationResult(
        "realized", hypergraph=from_incidence(matrix), feasibility=check.result
    )
