"""Feasibility tests for distinct-row binary matrices with prescribed
projections, plus the classical Gale-Ryser and Erdos-Gallai checks.

A regular instance asks for m distinct rows of sum h whose n columns all sum
to v; a span-one instance allows the column sums to take the two adjacent
values v and v-1. Both are decided by three exact integer conditions:
bounds (h <= n and v <= m), the counting identity between row and column
totals, and the capacity bound v*n <= h*C(n,h) that caps the number of
distinct rows at C(n,h).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .necklaces import binomial

__all__ = [
    "DegreeCheck",
    "Feasibility",
    "RegularInstance",
    "SpanOneInstance",
    "check_degree_sequence",
    "check_regular",
    "check_span_one",
    "classify_degrees",
    "conjugate",
    "erdos_gallai_check",
    "gale_ryser_check",
]


@dataclass(frozen=True)
class RegularInstance:
    """Homogeneous projections: m rows of sum h over n columns of sum v."""

    n: int
    m: int
    h: int
    v: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("column count must be positive")
        if min(self.m, self.h, self.v) < 0:
            raise ValueError("projections must be nonnegative")

    def degree_vector(self) -> tuple[int, ...]:
        return (self.v,) * self.n


@dataclass(frozen=True)
class SpanOneInstance:
    """Homogeneous row sums h; column sums take the value v on n0 columns and
    v-1 on the remaining n1 columns."""

    n: int
    h: int
    v: int
    n0: int
    n1: int

    def __post_init__(self) -> None:
        if self.n0 < 1 or self.n1 < 1:
            raise ValueError("both column-sum values must occur")
        if self.n0 + self.n1 != self.n:
            raise ValueError("n0 + n1 must equal n")
        if self.v < 1:
            raise ValueError("larger column sum must be positive")
        if self.h < 1:
            raise ValueError("row sum must be positive")

    @property
    def ones_total(self) -> int:
        return self.n * self.v - self.n1

    @property
    def m(self) -> int:
        total = self.ones_total
        if total % self.h:
            raise ValueError("row count is not integral for this instance")
        return total // self.h

    def degree_vector(self) -> tuple[int, ...]:
        return (self.v,) * self.n0 + (self.v - 1,) * self.n1


@dataclass(frozen=True)
class Feasibility:
    """Verdict of a feasibility check; `violated` names the first failing
    condition (cond1 = totals, cond2 = bounds, cond3 = capacity,
    integrality = no integral row count exists)."""

    feasible: bool
    violated: str | None = None
    m: int | None = None

    def to_json_dict(self) -> dict:
        return {"feasible": self.feasible, "violated": self.violated, "m": self.m}


def check_regular(inst: RegularInstance) -> Feasibility:
    """Decide whether a distinct-row matrix with homogeneous projections
    exists. Violations are reported in the fixed order bounds, totals,
    capacity."""
    n, m, h, v = inst.n, inst.m, inst.h, inst.v
    if h > n or v > m:
        return Feasibility(False, "cond2", m)
    if m * h != n * v:
        return Feasibility(False, "cond1", m)
    # Capacity: at most C(n,h) distinct rows of sum h exist. For h = 0 the
    # v-form is vacuous, so cap the row count directly.
    if v * n > h * binomial(n, h) or (h == 0 and m > 1):
        return Feasibility(False, "cond3", m)
    return Feasibility(True, None, m)


def check_span_one(inst: SpanOneInstance) -> Feasibility:
    """Decide whether a distinct-row matrix with span-one column sums exists.
    A non-integral row count is reported as `integrality`."""
    if inst.ones_total % inst.h:
        return Feasibility(False, "integrality", None)
    m = inst.m
    if inst.h > inst.n or inst.v > m:
        return Feasibility(False, "cond2", m)
    # The totals condition m*h = n*v - n1 holds by construction of m.
    if inst.v * inst.n > inst.h * binomial(inst.n, inst.h):
        return Feasibility(False, "cond3", m)
    return Feasibility(True, None, m)


def conjugate(values: Sequence[int]) -> tuple[int, ...]:
    """Ferrers conjugate: entry i (1-based) counts the input values >= i.
    Empty when every value is zero."""
    if any(x < 0 for x in values):
        raise ValueError("conjugate needs nonnegative entries")
    top = max(values, default=0)
    return tuple(sum(x >= i for x in values) for i in range(1, top + 1))


def gale_ryser_check(row_sums: Sequence[int], col_sums: Sequence[int]) -> bool:
    """Existence of some binary matrix (rows may repeat) with the given
    projections: equal totals plus the dominance inequalities, where partial
    sums of the conjugate of col_sums dominate those of row_sums sorted
    nonincreasingly."""
    if any(x < 0 for x in row_sums) or any(x < 0 for x in col_sums):
        raise ValueError("projections must be nonnegative")
    if sum(row_sums) != sum(col_sums):
        return False
    bars = conjugate(col_sums)
    lhs = 0
    rhs = 0
    for i, h_i in enumerate(sorted(row_sums, reverse=True)):
        lhs += bars[i] if i < len(bars) else 0
        rhs += h_i
        if lhs < rhs:
            return False
    return True


def erdos_gallai_check(degrees: Sequence[int]) -> bool:
    """True iff the sequence is realizable by a simple loopless graph."""
    if any(x < 0 for x in degrees):
        raise ValueError("degrees must be nonnegative")
    d = sorted(degrees, reverse=True)
    if sum(d) % 2:
        return False
    for k in range(1, len(d) + 1):
        if sum(d[:k]) > k * (k - 1) + sum(min(k, x) for x in d[k:]):
            return False
    return True


def classify_degrees(degrees: Sequence[int]) -> str:
    """Classify a degree vector as 'regular' (one value), 'span-one' (two
    adjacent values) or 'unsupported' (anything wider)."""
    if not degrees:
        raise ValueError("degree sequence must be nonempty")
    if any(x < 0 for x in degrees):
        raise ValueError("degrees must be nonnegative")
    spread = max(degrees) - min(degrees)
    if spread == 0:
        return "regular"
    if spread == 1:
        return "span-one"
    return "unsupported"


@dataclass(frozen=True)
class DegreeCheck:
    """Classification of a degree vector together with the matching
    feasibility verdict; instance and result are None when unsupported, and
    instance alone is None when no integral row count exists."""

    kind: str
    instance: RegularInstance | SpanOneInstance | None
    result: Feasibility | None


def check_degree_sequence(degrees: Sequence[int], h: int) -> DegreeCheck:
    """Classify `degrees` and run the matching feasibility check for edge
    size h."""
    if h < 1:
        raise ValueError("edge size must be positive")
    kind = classify_degrees(degrees)
    n = len(degrees)
    if kind == "unsupported":
        return DegreeCheck(kind, None, None)
    v = max(degrees)
    if kind == "regular":
        if (n * v) % h:
            return DegreeCheck(kind, None, Feasibility(False, "integrality", None))
        inst = RegularInstance(n=n, m=n * v // h, h=h, v=v)
        return DegreeCheck(kind, inst, check_regular(inst))
    n0 = sum(x == v for x in degrees)
    span_inst = SpanOneInstance(n=n, h=h, v=v, n0=n0, n1=n - n0)
    return DegreeCheck(kind, span_inst, check_span_one(span_inst))
