"""Seed-deterministic random matrices, graphs, and strings.

The verification suites and the CLI share these generators so a seed pins
the exact instances.  Conventions: matrix entries are drawn row-major; a
GF(2) entry is ``rng.randrange(2)``, a rational entry is ``rng.randint(-3, 3)``;
graphs draw one bit per unordered pair (i <= j) in row-major order and
mirror it.  Labels are v00, v01, ... so lexicographic order matches index
order; strings use letters a, b, c, ...
"""

from __future__ import annotations

import random
import string

from .matrix import GF2, RATIONAL, Matrix, SubsetMask
from .setsystems import set_system_of

__all__ = [
    "labels_for",
    "random_matrix",
    "random_graph",
    "random_vector",
    "random_subset",
    "random_valid_pivot_subset",
    "random_dos",
]


def labels_for(n: int) -> tuple[str, ...]:
    return tuple(f"v{i:02d}" for i in range(n))


def random_matrix(rng: random.Random, field: str, n: int) -> Matrix:
    labels = labels_for(n)
    if field == GF2:
        entries = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
    elif field == RATIONAL:
        entries = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    else:
        raise ValueError(f"unknown field {field!r}")
    return Matrix.from_entries(field, labels, entries)


def random_graph(rng: random.Random, n: int) -> Matrix:
    """A symmetric GF(2) matrix: one fair bit per unordered pair, loops included."""
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            bit = rng.randrange(2)
            entries[i][j] = bit
            entries[j][i] = bit
    return Matrix.from_entries(GF2, labels_for(n), entries)


def random_vector(rng: random.Random, field: str, n: int) -> list[int]:
    if field == GF2:
        return [rng.randrange(2) for _ in range(n)]
    if field == RATIONAL:
        return [rng.randint(-3, 3) for _ in range(n)]
    raise ValueError(f"unknown field {field!r}")


def random_subset(rng: random.Random, domain: tuple[str, ...]) -> SubsetMask:
    return SubsetMask(domain, rng.randrange(1 << len(domain)))


def random_valid_pivot_subset(rng: random.Random, A: Matrix) -> SubsetMask:
    """A uniformly chosen subset with nonsingular principal submatrix.

    The empty set always qualifies, so this never fails.
    """
    members = sorted(set_system_of(A).members)
    return SubsetMask(A.domain, rng.choice(members))


def random_dos(rng: random.Random, n: int) -> tuple[str, ...]:
    """A random double occurrence string over the first n letters."""
    letters = list(string.ascii_lowercase[:n]) * 2
    rng.shuffle(letters)
    return tuple(letters)
