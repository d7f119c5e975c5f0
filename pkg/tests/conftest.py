"""Shared brute-force helpers kept deliberately independent of the package:
rotation handling is reimplemented inline so enumeration-based expectations
do not route through the code under test."""

from itertools import combinations


def all_words(n: int, d: int) -> list[str]:
    """Every length-n binary word with exactly d ones, sorted."""
    out = []
    for ones in combinations(range(n), d):
        chars = ["0"] * n
        for j in ones:
            chars[j] = "1"
        out.append("".join(chars))
    return sorted(out)


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def brute_necklaces(n: int, d: int) -> list[str]:
    """Lexicographically least rotation of every density-d word, deduplicated."""
    return sorted({min(rotations(w)) for w in all_words(n, d)})


def brute_lyndon(n: int, d: int) -> list[str]:
    """Necklace representatives whose rotations are all distinct."""
    return [w for w in brute_necklaces(n, d) if len(set(rotations(w))) == len(w)]
