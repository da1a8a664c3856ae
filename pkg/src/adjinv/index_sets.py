"""Strictly increasing 1-based index sequences and their enumerations.

An index sequence is a strictly increasing tuple of positions drawn from
1..n.  These drive every minor sum in the package: the full family of size-k
sequences, and the constrained family of those containing one required
position.  Enumeration order is always lexicographic, which makes partitioning
a sum into contiguous rank ranges deterministic; ``subset_at_rank`` unranks a
lexicographic position directly for that purpose.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

IndexSeq = tuple[int, ...]


def _check_k_n(k: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"universe size must be positive, got {n}")
    if k < 1 or k > n:
        raise ValueError(f"subset size {k} outside 1..{n}")


def enumerate_k_subsets(k: int, n: int) -> Iterator[IndexSeq]:
    """All C(n, k) strictly increasing k-tuples from 1..n, lexicographic.

    Each call returns a fresh iterator, so streams are restartable and
    several may be consumed concurrently.
    """
    _check_k_n(k, n)
    return iter(combinations(range(1, n + 1), k))


def enumerate_containing(k: int, n: int, i: int) -> Iterator[IndexSeq]:
    """The C(n-1, k-1) members of ``enumerate_k_subsets(k, n)`` containing i.

    Yields in the same lexicographic order the filtered full enumeration
    would produce.
    """
    _check_k_n(k, n)
    if not 1 <= i <= n:
        raise ValueError(f"required index {i} outside 1..{n}")
    others = tuple(x for x in range(1, n + 1) if x != i)

    def generate() -> Iterator[IndexSeq]:
        for rest in combinations(others, k - 1):
            yield tuple(sorted(rest + (i,)))

    return generate()


def subset_at_rank(k: int, n: int, position: int) -> IndexSeq:
    """The sequence at a 0-based lexicographic position in ``enumerate_k_subsets``."""
    _check_k_n(k, n)
    total = comb(n, k)
    if not 0 <= position < total:
        raise ValueError(f"position {position} outside 0..{total - 1}")
    out = []
    x = 1
    remaining = position
    for slots_left in range(k, 0, -1):
        while True:
            block = comb(n - x, slots_left - 1)
            if remaining < block:
                break
            remaining -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)
