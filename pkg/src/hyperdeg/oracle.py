"""Exhaustive ground truth for small projection instances.

Deliberately independent of the constructive algorithms and of the
Gale-Ryser test: plain depth-first search over candidate rows with only
sound capacity pruning. Guarded by hard size caps; intended for verifying
the fast paths, and exposed through the CLI for the same purpose.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .words import BinaryMatrix

__all__ = [
    "MAX_ANY_MATRIX_SIDE",
    "MAX_DISTINCT_ROWS_COLS",
    "OracleResult",
    "exists_any_matrix",
    "exists_distinct_rows",
]

MAX_DISTINCT_ROWS_COLS = 8
MAX_ANY_MATRIX_SIDE = 5


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    witness: BinaryMatrix | None = None


def _candidate_rows(n: int, h: int) -> list[tuple[int, ...]]:
    """Positions of the ones of every length-n density-h word, ordered so the
    corresponding words are lexicographically increasing."""
    words = []
    for ones in combinations(range(n), h):
        chars = ["0"] * n
        for j in ones:
            chars[j] = "1"
        words.append("".join(chars))
    words.sort()
    return [tuple(j for j, ch in enumerate(w) if ch == "1") for w in words]


def _positions_to_row(ones: tuple[int, ...], n: int) -> str:
    chars = ["0"] * n
    for j in ones:
        chars[j] = "1"
    return "".join(chars)


def exists_distinct_rows(n: int, h: int, col_sums: Sequence[int]) -> OracleResult:
    """Search for a binary matrix with pairwise distinct rows, each summing
    to h, whose column sums equal col_sums. Sound and complete within the
    size guard; the witness, when present, is the lexicographically least
    row selection."""
    if n < 1:
        raise ValueError("column count must be positive")
    if n > MAX_DISTINCT_ROWS_COLS:
        raise ValueError(
            f"column count capped at {MAX_DISTINCT_ROWS_COLS} for exhaustive search"
        )
    if len(col_sums) != n:
        raise ValueError("column-sum vector length must equal n")
    if any(x < 0 for x in col_sums):
        raise ValueError("column sums must be nonnegative")
    if h < 0:
        raise ValueError("row sum must be nonnegative")
    total = sum(col_sums)
    if h == 0:
        # Only all-zero rows are available and at most one may appear.
        if total:
            return OracleResult(False)
        return OracleResult(True, BinaryMatrix((), n))
    if total % h:
        raise ValueError("column sums are inconsistent with the row sum")
    m = total // h
    candidates = _candidate_rows(n, h)
    if m > len(candidates):
        return OracleResult(False)

    remaining = list(col_sums)
    chosen: list[int] = []

    def search(start: int, rows_left: int) -> bool:
        if rows_left == 0:
            # sum(remaining) == rows_left * h throughout, so all zeros here.
            return True
        if len(candidates) - start < rows_left:
            return False
        if max(remaining) > rows_left:
            return False
        for idx in range(start, len(candidates)):
            ones = candidates[idx]
            if all(remaining[j] > 0 for j in ones):
                for j in ones:
                    remaining[j] -= 1
                chosen.append(idx)
                if search(idx + 1, rows_left - 1):
                    return True
                chosen.pop()
                for j in ones:
                    remaining[j] += 1
        return False

    if search(0, m):
        rows = tuple(_positions_to_row(candidates[i], n) for i in chosen)
        return OracleResult(True, BinaryMatrix(rows, n))
    return OracleResult(False)


def exists_any_matrix(row_sums: Sequence[int], col_sums: Sequence[int]) -> bool:
    """Exhaustively decide whether any binary matrix (duplicate rows allowed)
    has the given row and column sums."""
    m, n = len(row_sums), len(col_sums)
    if m > MAX_ANY_MATRIX_SIDE or n > MAX_ANY_MATRIX_SIDE:
        raise ValueError(
            f"sides capped at {MAX_ANY_MATRIX_SIDE} for exhaustive search"
        )
    if any(x < 0 for x in row_sums) or any(x < 0 for x in col_sums):
        raise ValueError("projections must be nonnegative")
    if sum(row_sums) != sum(col_sums):
        return False
    if m == 0 or n == 0:
        return True  # totals match, so both sides are all zero
    rows = sorted(row_sums, reverse=True)
    if rows[0] > n:
        return False
    options = {h: list(combinations(range(n), h)) for h in set(rows)}
    remaining = list(col_sums)

    def fill(i: int, min_idx: int) -> bool:
        if i == m:
            return True  # totals invariant forces remaining == 0
        if max(remaining) > m - i:
            return False
        opts = options[rows[i]]
        # Equal row sums are interchangeable: force nondecreasing option
        # indices across such rows (duplicates stay allowed).
        start = min_idx if i > 0 and rows[i] == rows[i - 1] else 0
        for idx in range(start, len(opts)):
            ones = opts[idx]
            if all(remaining[j] > 0 for j in ones) or not ones:
                for j in ones:
                    remaining[j] -= 1
                if fill(i + 1, idx):
                    return True
                for j in ones:
                    remaining[j] += 1
        return False

    return fill(0, 0)
