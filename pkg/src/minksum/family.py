"""Families of simplices, neighborhood signatures, and the ordered-partition face rule.

Ground elements are 1-based throughout. A family is an ordered multiset of
nonempty subsets of ``{1, ..., r}``; its polytope is the Minkowski sum of the
standard simplices spanned by those subsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import CapabilityError, DomainError, PreconditionError

MAX_SUBSET_RANK = 20


@dataclass(frozen=True)
class SimplexFamily:
    """Ground size ``r`` plus the ordered sets ``F_1, ..., F_k``."""

    ground_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = self.ground_size
        if not isinstance(r, int) or r < 1:
            raise DomainError(f"ground size must be a positive integer, got {r!r}")
        if len(self.sets) == 0:
            raise DomainError("a family needs at least one set")
        canon = []
        for s in self.sets:
            elems = tuple(sorted(set(int(e) for e in s)))
            if not elems:
                raise DomainError("sets must be nonempty")
            if elems[0] < 1 or elems[-1] > r:
                raise DomainError(f"set {list(s)} is not a subset of [1..{r}]")
            canon.append(elems)
        object.__setattr__(self, "sets", tuple(canon))

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], r: int | None = None) -> "SimplexFamily":
        """Build a family; ``r`` defaults to the largest element used."""
        sets = [tuple(s) for s in sets]
        if r is None:
            r = max((max(s) for s in sets if s), default=1)
        return cls(r, tuple(sets))

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def r(self) -> int:
        return self.ground_size

    def masks(self) -> np.ndarray:
        """Bitmask per set, bit ``i - 1`` standing for ground element ``i``."""
        return np.array([sum(1 << (e - 1) for e in s) for s in self.sets], dtype=np.int64)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.sets)))

    def to_json(self) -> dict:
        return {"r": self.ground_size, "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json(cls, data: dict | str) -> "SimplexFamily":
        """Parse the ``{"r": ..., "sets": [[...], ...]}`` wire format.

        Elements inside each set must be strictly increasing integers.
        """
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "r" not in data or "sets" not in data:
            raise DomainError('family JSON needs keys "r" and "sets"')
        r, sets = data["r"], data["sets"]
        if not isinstance(r, int) or isinstance(r, bool):
            raise DomainError('"r" must be an integer')
        if not isinstance(sets, list):
            raise DomainError('"sets" must be a list of integer lists')
        for s in sets:
            if not isinstance(s, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in s):
                raise DomainError('"sets" must be a list of integer lists')
            if any(a >= b for a, b in zip(s, s[1:])):
                raise DomainError(f"set {s} is not strictly increasing")
        return cls(r, tuple(tuple(s) for s in sets))

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(map(str, s)) + "}" for s in self.sets)
        return f"({body}) in [{self.ground_size}]"


@dataclass(frozen=True)
class OrderedPartition:
    """Blocks ``(C_1, ..., C_s)`` of ``[r]``; later blocks carry larger weights."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise DomainError("partition blocks must be nonempty")
        seen: set[int] = set()
        for b in blocks:
            if seen & b:
                raise DomainError("partition blocks must be disjoint")
            seen |= b

    def covers(self, r: int) -> bool:
        return set().union(*self.blocks) == set(range(1, r + 1))


class Components(NamedTuple):
    parts: tuple[tuple[int, ...], ...]
    count: int
    support_size: int


def _check_element(F: SimplexFamily, i: int) -> None:
    if not 1 <= i <= F.ground_size:
        raise DomainError(f"ground element {i} outside [1..{F.ground_size}]")


def neighborhood(F: SimplexFamily, i: int) -> frozenset[int]:
    """Indices ``j`` (1-based) of the sets containing ``i``."""
    _check_element(F, i)
    return frozenset(j for j, s in enumerate(F.sets, start=1) if i in s)


def signatures(F: SimplexFamily) -> list[frozenset[int]]:
    """Neighborhood signature of every ground element, in order ``1..r``."""
    sig: list[set[int]] = [set() for _ in range(F.ground_size)]
    for j, s in enumerate(F.sets, start=1):
        for e in s:
            sig[e - 1].add(j)
    return [frozenset(x) for x in sig]


def components(F: SimplexFamily) -> Components:
    """Connected components of the support, joined through shared sets."""
    parent = {e: e for e in F.support()}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s in F.sets:
        root = find(s[0])
        for e in s[1:]:
            other = find(e)
            if other != root:
                parent[max(root, other)] = min(root, other)
                root = min(root, other)
    groups: dict[int, list[int]] = {}
    for e in parent:
        groups.setdefault(find(e), []).append(e)
    parts = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    return Components(parts, len(parts), len(parent))


def dimension(F: SimplexFamily) -> int:
    comp = components(F)
    return comp.support_size - comp.count


def signature_classes(F: SimplexFamily) -> list[tuple[int, ...]]:
    """Maximal classes of support elements sharing a neighborhood signature."""
    classes: dict[frozenset[int], list[int]] = {}
    for i, sig in enumerate(signatures(F), start=1):
        if sig:
            classes.setdefault(sig, []).append(i)
    return sorted(tuple(c) for c in classes.values())


class Reduction(NamedTuple):
    """Result of collapsing an equal-signature class onto its maximum ``m``."""

    family: SimplexFamily
    m: int

    @property
    def foot(self) -> SimplexFamily | None:
        """Face of the reduced polytope where coordinate ``m`` is zero.

        ``None`` when that face is empty, i.e. some set was exactly ``{m}``.
        """
        sets = []
        for s in self.family.sets:
            rest = tuple(e for e in s if e != self.m)
            if not rest:
                return None
            sets.append(rest)
        return SimplexFamily(self.family.ground_size, tuple(sets))


def reduce(F: SimplexFamily, A: Iterable[int]) -> Reduction:
    """Replace every occurrence of the class ``A`` by the single element ``max(A)``."""
    A = frozenset(A)
    if not A:
        raise PreconditionError("the class A must be nonempty")
    for i in A:
        _check_element(F, i)
    sigs = {neighborhood(F, i) for i in A}
    if len(sigs) != 1:
        raise PreconditionError(f"elements of {sorted(A)} do not share one signature")
    m = max(A)
    sets = []
    for s in F.sets:
        if A & set(s):
            sets.append(tuple(sorted((set(s) - A) | {m})))
        else:
            sets.append(s)
    return Reduction(SimplexFamily(F.ground_size, tuple(sets)), m)


def face_family(F: SimplexFamily, C: OrderedPartition | Sequence[Iterable[int]]) -> SimplexFamily:
    """Family whose polytope is the face maximizing a functional of shape ``C``.

    Each set is cut down to its intersection with the last block it meets.
    """
    if not isinstance(C, OrderedPartition):
        C = OrderedPartition(tuple(frozenset(b) for b in C))
    if not C.covers(F.ground_size):
        raise DomainError("ordered partition does not cover the ground set")
    level = {}
    for idx, block in enumerate(C.blocks):
        for e in block:
            level[e] = idx
    sets = []
    for s in F.sets:
        top = max(level[e] for e in s)
        sets.append(tuple(e for e in s if level[e] == top))
    return SimplexFamily(F.ground_size, tuple(sets))


def rank_table(F: SimplexFamily) -> np.ndarray:
    """``rank[D]`` = number of sets meeting ``D``, for every bitmask ``D``."""
    if F.ground_size > MAX_SUBSET_RANK:
        raise CapabilityError(
            f"subset tables need r <= {MAX_SUBSET_RANK}; use exactlp.in_hull for membership",
            stage="subset-table",
        )
    return kernels.rank_table(F.masks(), F.ground_size)


def contains_point(F: SimplexFamily, x: Sequence) -> bool:
    """Exact membership test against the full subset-inequality description."""
    r = F.ground_size
    if len(x) != r:
        raise DomainError(f"point has length {len(x)}, expected {r}")
    if r > MAX_SUBSET_RANK:
        raise CapabilityError(
            f"subset enumeration needs r <= {MAX_SUBSET_RANK}; use exactlp.in_hull over the vertices",
            stage="contains_point",
        )
    xs = [Fraction(v) for v in x]
    if any(v < 0 for v in xs) or sum(xs) != F.k:
        return False
    scale = 1
    for v in xs:
        scale = scale * v.denominator // np.gcd(scale, v.denominator)
    ints = np.array([[int(v * scale) for v in xs]], dtype=np.int64)
    sums = kernels.subset_sums(ints, r, dtype=np.int64)[0]
    return bool(np.all(sums <= scale * rank_table(F)))


def contains_points(F: SimplexFamily, points: np.ndarray) -> np.ndarray:
    """Vectorized :func:`contains_point` for integer points (rows)."""
    pts = np.asarray(points, dtype=np.int64)
    if pts.ndim != 2 or pts.shape[1] != F.ground_size:
        raise DomainError("points must be an (n, r) integer array")
    if F.ground_size > MAX_SUBSET_RANK:
        raise CapabilityError("subset enumeration limit exceeded", stage="contains_points")
    ok = (pts >= 0).all(axis=1) & (pts.sum(axis=1) == F.k)
    sums = kernels.subset_sums(pts, F.ground_size, dtype=np.int64)
    return ok & (sums <= rank_table(F)[None, :]).all(axis=1)
