"""Closed-form counts for simplex sums, degree maxima, and a Mantel-type bound.

Each closed form here has a brute-force counterpart elsewhere in the package
(skeleton construction, face enumeration, or exhaustive graph scans).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels
from .errors import CapabilityError, DomainError
from .family import SimplexFamily
from .polynomial import FPolynomial

MAX_MANTEL_N = 7


class TwoSumStats(NamedTuple):
    x: int  # |F \ F'|
    y: int  # |F' \ F|
    z: int  # |F & F'|

    @classmethod
    def of(cls, Fa: Iterable[int], Fb: Iterable[int]) -> "TwoSumStats":
        Fa, Fb = set(Fa), set(Fb)
        return cls(len(Fa - Fb), len(Fb - Fa), len(Fa & Fb))

    @property
    def union(self) -> int:
        return self.x + self.y + self.z


def two_sum_vertex_count(s: TwoSumStats) -> int:
    x, y, z = s
    return (x + z) * (y + z) - z * (z - 1)


def two_sum_vertex_count_alt(s: TwoSumStats) -> int:
    """The same count obtained from the f-polynomial decomposition."""
    x, y, z = s
    return z * (x + y + 1) + x * y


def two_sum_edge_count(s: TwoSumStats) -> int:
    x, y, z = s
    twice = x * y * (x + y + 2 * z - 2) + z * (x + y + z - 1) * (x + y + 1)
    if twice % 2:
        raise ArithmeticError(f"odd handshake total for {s}")
    return twice // 2


def average_degree(s: TwoSumStats) -> Fraction:
    """Exact average vertex degree of a full-dimensional two-simplex sum."""
    if s.z < 1:
        raise DomainError("the sum is full-dimensional only when the sets intersect")
    return Fraction(2 * two_sum_edge_count(s), two_sum_vertex_count(s))


def average_degree_scan(r_max: int = 40) -> list[tuple[int, TwoSumStats, Fraction]]:
    """Every full-dimensional shape ``(x, y, z)`` with ``x + y + z = r <= r_max``."""
    out = []
    for r in range(1, r_max + 1):
        for x in range(r):
            for y in range(r - x):
                s = TwoSumStats(x, y, r - x - y)
                out.append((r, s, average_degree(s)))
    return out


def f_decompose(f_simplex: FPolynomial, f_reduced: FPolynomial, f_foot: FPolynomial) -> FPolynomial:
    """f-polynomial of a family rebuilt from its collapsed class, reduced family and foot.

    Pass the zero polynomial for an empty foot.
    """
    return f_simplex * f_reduced - f_simplex * f_foot + f_foot


def two_sum_f_polynomial(Fa: Iterable[int], Fb: Iterable[int]) -> FPolynomial:
    x, y, z = TwoSumStats.of(Fa, Fb)
    simplex = FPolynomial.simplex
    if z <= 1:
        return simplex(x + z) * simplex(y + z)
    return f_decompose(simplex(z), simplex(x + 1) * simplex(y + 1), simplex(x) * simplex(y))


def d_max(r: int) -> int:
    """Largest vertex degree over all simplex sums in ``R^r``."""
    if r < 1:
        raise DomainError("r must be positive")
    return r * r // 4


def d_k_max(k: int, r: int) -> int:
    """Largest vertex degree over sums of at most ``k`` simplices in ``R^r``."""
    if not 1 <= k <= r // 2:
        raise DomainError(f"need 1 <= k <= r/2, got k={k}, r={r}")
    return k * (r - k)


def lower_bound_family(k: int, r: int) -> SimplexFamily:
    """Sets ``{i, k+1, ..., r}`` for ``i = 1..k``; ``e_1 + ... + e_k`` has degree ``k(r-k)``."""
    if not 1 <= k <= r - 1:
        raise DomainError(f"need 1 <= k <= r-1, got k={k}, r={r}")
    tail = tuple(range(k + 1, r + 1))
    return SimplexFamily(r, tuple((i,) + tail for i in range(1, k + 1)))


def mantel_extremal(n: int, k: int) -> int:
    if not (1 <= k and 2 * k <= n):
        raise DomainError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    return k * (n - k)


@lru_cache(maxsize=None)
def _scan(n: int):
    return kernels.graph_scan(n)


def complete_bipartite_masks(n: int, k: int) -> set[int]:
    bit = {}
    for a in range(n):
        for b in range(a + 1, n):
            bit[(a, b)] = len(bit)
    out = set()
    for U in combinations(range(n), k):
        us = set(U)
        out.add(sum(1 << i for (a, b), i in bit.items() if (a in us) != (b in us)))
    return out


class MantelScan(NamedTuple):
    max_edges: int
    maximizers: frozenset[int]  # edge bitmasks


def mantel_brute(n: int, k: int) -> MantelScan:
    """Exhaustive search over triangle-free graphs on ``n`` vertices with a cover of size <= k."""
    mantel_extremal(n, k)
    if n > MAX_MANTEL_N:
        raise CapabilityError(f"brute force limited to n <= {MAX_MANTEL_N}", stage="mantel")
    tri_free, cover, edges = _scan(n)
    ok = tri_free & (cover <= k)
    best = int(edges[ok].max())
    masks = np.flatnonzero(ok & (edges == best))
    return MantelScan(best, frozenset(int(m) for m in masks))


def verify_mantel_brute(n: int, k: int) -> bool:
    scan = mantel_brute(n, k)
    return scan.max_edges == mantel_extremal(n, k) and scan.maximizers == complete_bipartite_masks(n, k)
