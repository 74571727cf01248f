"""Rep-functions: one chosen element per set, and the lattice points they produce.

A point of the Minkowski sum is a vertex exactly when a single rep-function
maps onto it, so the census of images is the vertex enumerator.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import CapabilityError, DomainError, InvariantError, StructureError
from .family import SimplexFamily

DEFAULT_BUDGET = 10**8

Point = tuple[int, ...]


def budget() -> int:
    """Rep-function budget, overridable through ``MINKSUM_BUDGET``."""
    raw = os.environ.get("MINKSUM_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class RepFunction:
    choices: tuple[int, ...]

    def __iter__(self):
        return iter(self.choices)

    def __len__(self):
        return len(self.choices)


def count_repfns(F: SimplexFamily) -> int:
    return math.prod(len(s) for s in F.sets)


def _check_budget(F: SimplexFamily, limit: int | None) -> int:
    total = count_repfns(F)
    limit = budget() if limit is None else limit
    if total > limit:
        raise CapabilityError(
            f"{total} rep-functions exceed the budget of {limit} (raise MINKSUM_BUDGET)",
            stage="rep-function census",
        )
    return total


def check_repfn(F: SimplexFamily, f: RepFunction | Sequence[int]) -> RepFunction:
    f = f if isinstance(f, RepFunction) else RepFunction(tuple(f))
    if len(f.choices) != F.k or any(c not in s for c, s in zip(f.choices, F.sets)):
        raise DomainError(f"{list(f.choices)} is not a rep-function of {F}")
    return f


def enumerate_repfns(F: SimplexFamily, limit: int | None = None) -> Iterator[RepFunction]:
    """All rep-functions in lexicographic order of their choice vectors."""
    _check_budget(F, limit)
    for choice in itertools.product(*F.sets):
        yield RepFunction(choice)


def point_of(f: RepFunction | Sequence[int], r: int) -> Point:
    """``coords[i]`` counts the sets whose chosen element is ``i``."""
    coords = [0] * r
    for c in f:
        if not 1 <= c <= r:
            raise DomainError(f"choice {c} outside [1..{r}]")
        coords[c - 1] += 1
    return tuple(coords)


def _census_arrays(F: SimplexFamily, limit: int | None) -> tuple[np.ndarray, np.ndarray]:
    total = _check_budget(F, limit)
    r, k = F.ground_size, F.k
    if k * math.log2(max(r, 2)) >= 62:
        counter = Counter(point_of(f, r) for f in itertools.product(*F.sets))
        pts = sorted(counter)
        return np.array(pts, dtype=np.int64), np.array([counter[p] for p in pts], dtype=np.int64)
    width = max(len(s) for s in F.sets)
    table = np.zeros((k, width), dtype=np.int64)
    for j, s in enumerate(F.sets):
        table[j, : len(s)] = [e - 1 for e in s]
    sizes = np.array([len(s) for s in F.sets], dtype=np.int64)
    keys, counts = kernels.census(table, sizes, r, total)
    points = kernels.decode_keys(keys, k, r, r)
    order = np.lexsort(points.T[::-1])
    return points[order], counts[order]


def multiplicity_map(F: SimplexFamily, limit: int | None = None) -> dict[Point, int]:
    """Exact number of rep-functions landing on each image point."""
    points, counts = _census_arrays(F, limit)
    return {tuple(int(v) for v in p): int(c) for p, c in zip(points, counts)}


def vertex_array(F: SimplexFamily, limit: int | None = None) -> np.ndarray:
    """Vertices as a lexicographically sorted ``(n, r)`` integer array."""
    points, counts = _census_arrays(F, limit)
    return points[counts == 1]


def vertices(F: SimplexFamily, limit: int | None = None) -> list[Point]:
    """Points with a unique rep-function, sorted lexicographically."""
    return [tuple(int(v) for v in p) for p in vertex_array(F, limit)]


def integer_points(F: SimplexFamily, limit: int | None = None) -> list[Point]:
    """Every lattice point of the polytope (each is the image of some rep-function)."""
    points, _ = _census_arrays(F, limit)
    return [tuple(int(v) for v in p) for p in points]


def meet_join(F: SimplexFamily, f, g) -> tuple[RepFunction, RepFunction]:
    """Componentwise minimum and maximum of two rep-functions.

    Raises :class:`StructureError` if either result leaves some set, which can
    only happen when that set is not an interval of ``[r]``.
    """
    f, g = check_repfn(F, f), check_repfn(F, g)
    lo = tuple(min(a, b) for a, b in zip(f, g))
    hi = tuple(max(a, b) for a, b in zip(f, g))
    for j, (a, b, s) in enumerate(zip(lo, hi, F.sets), start=1):
        if a not in s or b not in s:
            raise StructureError(f"componentwise min/max leaves set F_{j} = {set(s)}")
    return RepFunction(lo), RepFunction(hi)


def _alternating_path(F: SimplexFamily, f: list[int], g: Sequence[int], src: int, dst: int) -> list[int]:
    """Set indices (0-based) along a shortest path from ``src`` to ``dst`` that
    leaves each right node through an edge of ``M_f`` and arrives through ``M_g``."""
    by_f: dict[int, list[int]] = {}
    for j, (a, b) in enumerate(zip(f, g)):
        if a != b:
            by_f.setdefault(a, []).append(j)
    prev: dict[int, tuple[int, int]] = {}
    seen = {src}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == dst:
            break
        for j in by_f.get(node, []):
            nxt = g[j]
            if nxt not in seen:
                seen.add(nxt)
                prev[nxt] = (node, j)
                queue.append(nxt)
    if dst not in seen:
        return []
    path = []
    node = dst
    while node != src:
        node, j = prev[node]
        path.append(j)
    return path[::-1]


def alternating_interpolate(F: SimplexFamily, f, g, i1: int, i2: int, t: int) -> list[RepFunction]:
    """Rep-functions whose images step from ``u(f)`` towards ``u(g)`` one unit at a time.

    Requires ``u(g) = u(f) + t (e_{i1} - e_{i2})``. Returns ``f_1, ..., f_{t-1}``
    with ``u(f_l) = u(f) + l (e_{i1} - e_{i2})``.
    """
    f, g = check_repfn(F, f), check_repfn(F, g)
    r = F.ground_size
    if t < 1 or i1 == i2 or not (1 <= i1 <= r and 1 <= i2 <= r):
        raise DomainError("need t >= 1 and distinct ground elements i1, i2")
    uf, ug = point_of(f, r), point_of(g, r)
    expected = list(uf)
    expected[i1 - 1] += t
    expected[i2 - 1] -= t
    if tuple(expected) != ug:
        raise DomainError("u(g) is not u(f) + t(e_i1 - e_i2)")
    current = list(f.choices)
    out = []
    for _ in range(t - 1):
        path = _alternating_path(F, current, g.choices, i2, i1)
        if not path:
            raise InvariantError(
                f"no alternating path from {i2} to {i1} between {current} and {list(g.choices)}"
            )
        for j in path:
            current[j] = g.choices[j]
        out.append(RepFunction(tuple(current)))
    return out


def greedy_vertex(F: SimplexFamily, order: Sequence[int]) -> Point:
    """Vertex maximizing a functional that increases along ``order``.

    ``order`` lists ground elements from smallest to largest weight; each set
    contributes one unit to its heaviest element.
    """
    r = F.ground_size
    if sorted(order) != list(range(1, r + 1)):
        raise DomainError("order must be a permutation of 1..r")
    pos = {e: p for p, e in enumerate(order)}
    coords = [0] * r
    for s in F.sets:
        coords[max(s, key=pos.__getitem__) - 1] += 1
    return tuple(coords)
