"""Brute-force ground truth: filter all (2n)! permutations of {1..2n}.

Deliberately unoptimized.  This module exists to validate the direct
enumerator and to serve as the benchmark baseline, so it must stay simple
enough to be obviously correct.
"""

import math
from itertools import permutations
from typing import Iterator, Sequence

from fpfi.core import Involution, rank_of

__all__ = [
    "DEFAULT_MAX_GROUND_SIZE",
    "OracleSizeError",
    "is_fpfi",
    "iter_permutation_tables",
    "naive_enumerate",
]

# 12! = 479,001,600 candidates; anything above that takes far too long by default
DEFAULT_MAX_GROUND_SIZE = 12


class OracleSizeError(ValueError):
    """A brute-force pass over (2n)! permutations would exceed the guard."""


def is_fpfi(table: Sequence[int]) -> bool:
    """True iff the permutation table is a fixed-point-free involution.

    ``table[e - 1]`` is the image of element e.  Checks that no element maps
    to itself and that applying the table twice returns every element.
    Expects a permutation of {1..len(table)}.
    """
    return all(x != e and table[x - 1] == e for e, x in enumerate(table, 1))


def iter_permutation_tables(size: int) -> Iterator[tuple[int, ...]]:
    """All size! permutation tables of {1..size}, in lexicographic order."""
    if size < 0:
        raise ValueError(f"ground size must be non-negative, got {size}")
    return permutations(range(1, size + 1))


def naive_enumerate(n: int, max_ground_size: int = DEFAULT_MAX_GROUND_SIZE) -> list[Involution]:
    """Every fixed-point-free involution on {1..2n}, found by exhaustive filtering.

    Walks all (2n)! permutations, keeps the ones that are fixed-point-free
    involutions, converts each survivor to canonical form, and returns them
    sorted by rank.  Refuses ground sizes above ``max_ground_size``; pass a
    larger value to run bigger sizes deliberately.
    """
    if n < 0:
        raise ValueError(f"pair count must be non-negative, got {n}")
    size = 2 * n
    if size > max_ground_size:
        raise OracleSizeError(
            f"ground size {size} exceeds the brute-force guard ({max_ground_size}): "
            f"{math.factorial(size)} permutations would be examined"
        )
    found = []
    for table in iter_permutation_tables(size):
        if is_fpfi(table):
            found.append(Involution.from_pairs((e, x) for e, x in enumerate(table, 1) if e < x))
    # each involution arises from exactly one permutation
    assert len(set(found)) == len(found)
    found.sort(key=rank_of)
    return found
