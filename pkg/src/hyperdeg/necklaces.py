"""Fixed-density necklaces and Lyndon words.

Exact divisor-sum counting formulas and lexicographic generation, plus the
small number-theoretic helpers they need. All arithmetic is exact integer
arithmetic.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

__all__ = [
    "binomial",
    "common_divisors",
    "count_lyndon",
    "count_necklaces",
    "euler_phi",
    "gen_lyndon",
    "gen_necklaces",
    "mobius",
]


def common_divisors(n: int, h: int) -> list[int]:
    """Increasing list of the common divisors of n and h, from 1 to gcd(n,h)."""
    if n < 1 or h < 1:
        raise ValueError("common_divisors needs positive arguments")
    g = math.gcd(n, h)
    return [d for d in range(1, g + 1) if g % d == 0]


def euler_phi(j: int) -> int:
    """Count of integers in [1, j] coprime to j."""
    if j < 1:
        raise ValueError("euler_phi needs a positive argument")
    result, rest = j, j
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def mobius(j: int) -> int:
    """0 when j has a squared prime factor, else (-1)^(number of prime factors)."""
    if j < 1:
        raise ValueError("mobius needs a positive argument")
    factors = 0
    rest = j
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                return 0
            factors += 1
        p += 1
    if rest > 1:
        factors += 1
    return -1 if factors % 2 else 1


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when k exceeds n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return math.comb(n, k)


def _check_density_class(n: int, d: int) -> None:
    if n < 1:
        raise ValueError("word length must be positive")
    if not 0 <= d <= n:
        raise ValueError(f"density must lie in [0, {n}], got {d}")


def _divisors(g: int) -> list[int]:
    return [j for j in range(1, g + 1) if g % j == 0]


def count_necklaces(n: int, d: int) -> int:
    """Number of binary necklaces of length n with exactly d ones."""
    _check_density_class(n, d)
    total = sum(
        euler_phi(j) * math.comb(n // j, d // j) for j in _divisors(math.gcd(n, d))
    )
    quotient, rest = divmod(total, n)
    assert rest == 0, "necklace divisor sum must be a multiple of n"
    return quotient


def count_lyndon(n: int, d: int) -> int:
    """Number of binary Lyndon words of length n with exactly d ones."""
    _check_density_class(n, d)
    total = sum(
        mobius(j) * math.comb(n // j, d // j) for j in _divisors(math.gcd(n, d))
    )
    quotient, rest = divmod(total, n)
    assert rest == 0, "Lyndon divisor sum must be a multiple of n"
    return quotient


def gen_lyndon(n: int, d: int) -> Iterator[str]:
    """Yield the Lyndon words of length n and density d in increasing
    lexicographic order. Each call returns an independent stream."""
    _check_density_class(n, d)
    return _generate(n, d, lyndon=True)


def gen_necklaces(n: int, d: int) -> Iterator[str]:
    """Yield the canonical necklace representatives of length n and density d
    in increasing lexicographic order. Each call returns an independent stream."""
    _check_density_class(n, d)
    return _generate(n, d, lyndon=False)


def _generate(n: int, d: int, lyndon: bool) -> Iterator[str]:
    # Fredricksen-Kessler-Maiorana recursion over prenecklaces, with branches
    # that cannot reach exactly d ones pruned away. Trying 0 before 1 at every
    # position makes the output order lexicographic; a leaf at depth n is a
    # necklace when its longest-prefix period p divides n, and a Lyndon word
    # when p == n.
    word = bytearray(n + 1)  # word[0] is the sentinel read by the copy step

    def extend(t: int, p: int, ones: int) -> Iterator[str]:
        if ones > d or d - ones > n - t + 1:
            return
        if t > n:
            emit = (p == n) if lyndon else (n % p == 0)
            if emit:
                yield "".join("01"[b] for b in word[1:])
            return
        copied = word[t - p]
        word[t] = copied
        yield from extend(t + 1, p, ones + copied)
        if copied == 0:
            word[t] = 1
            yield from extend(t + 1, t, ones + 1)

    return extend(1, 1, 0)
