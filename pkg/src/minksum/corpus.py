"""Deterministic test corpora of small families.

Exhaustive where that is cheap, seeded random samples elsewhere, so every
run of the verification suite sees the same families.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .family import SimplexFamily, signature_classes

SEED = 20080501


def subsets(r: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of ``[r]``, by size then lexicographically."""
    return [c for size in range(1, r + 1) for c in combinations(range(1, r + 1), size)]


def two_set_pairs(r: int = 6) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered pairs of nonempty subsets of ``[r]`` (a set may pair with itself)."""
    yield from combinations_with_replacement(subsets(r), 2)


def exhaustive_families(r: int, k: int) -> Iterator[SimplexFamily]:
    """Every multiset of ``k`` nonempty subsets of ``[r]``."""
    for sets in combinations_with_replacement(subsets(r), k):
        yield SimplexFamily(r, sets)


def random_family(rng: random.Random, r: int, k: int) -> SimplexFamily:
    sets = []
    for _ in range(k):
        mask = rng.randrange(1, 1 << r)
        sets.append(tuple(i + 1 for i in range(r) if mask >> i & 1))
    return SimplexFamily(r, tuple(sets))


def small_corpus(samples: int = 40, seed: int = SEED) -> list[SimplexFamily]:
    """Families with ``r <= 6`` and ``k <= 3``."""
    rng = random.Random(seed)
    out: list[SimplexFamily] = []
    for r in (1, 2, 3):
        for k in (1, 2, 3):
            out.extend(exhaustive_families(r, k))
    for k in (1, 2):
        out.extend(exhaustive_families(4, k))
    out.extend(random_family(rng, 4, 3) for _ in range(samples))
    for r in (5, 6):
        for k in (1, 2, 3):
            out.extend(random_family(rng, r, k) for _ in range(samples))
    return out


def k3_corpus(per_r: int = 25, seed: int = SEED + 3) -> list[SimplexFamily]:
    """Random three-set families with ``3 <= r <= 6``."""
    rng = random.Random(seed)
    return [random_family(rng, r, 3) for r in (3, 4, 5, 6) for _ in range(per_r)]


def duplicated_signature_corpus(count: int = 60, seed: int = SEED + 7) -> list[SimplexFamily]:
    """Random families with ``r <= 6`` having a signature class of size at least two."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        F = random_family(rng, rng.randint(2, 6), rng.randint(1, 3))
        if any(len(c) > 1 for c in signature_classes(F)):
            out.append(F)
    return out
