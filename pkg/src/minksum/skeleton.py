"""One-skeleton, vertex digraphs, rhombus types and f-vectors of simplex sums.

Three independent constructions of the edge graph live here:

* :func:`build_skeleton` certifies every candidate pair ``u, u + a(e_i - e_j)``
  with the exact LP in :mod:`minksum.exactlp`;
* :func:`skeleton_via_partitions` reads edges off the ordered-partition faces;
* :func:`skeleton_via_exchange` takes, at each vertex, the transitive reduction
  of the unit-exchange digraph.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import exactlp, family, kernels, repfn
from .errors import CapabilityError, DomainError, InvariantError
from .family import OrderedPartition, SimplexFamily
from .polynomial import FPolynomial

DEFAULT_MAX_VERTICES = 1500
MAX_PARTITION_R = 8

Point = tuple[int, ...]


class Edge(NamedTuple):
    """``vertices[b] - vertices[a] == alpha * (e_i - e_j)`` (``i, j`` 1-based)."""

    a: int
    b: int
    i: int
    j: int
    alpha: int


@dataclass
class SkeletonGraph:
    vertices: list[Point]
    edges: list[Edge]
    _index: dict[Point, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index = {v: n for n, v in enumerate(self.vertices)}

    def index(self, u: Sequence[int]) -> int:
        try:
            return self._index[tuple(u)]
        except KeyError:
            raise DomainError(f"{tuple(u)} is not a vertex of this skeleton") from None

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        return deg

    def neighbors(self, u: Sequence[int]) -> list[Point]:
        n = self.index(u)
        out = [self.vertices[e.b] for e in self.edges if e.a == n]
        out += [self.vertices[e.a] for e in self.edges if e.b == n]
        return sorted(out)

    def edge_set(self) -> set[frozenset[Point]]:
        return {frozenset((self.vertices[e.a], self.vertices[e.b])) for e in self.edges}

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, list[int]] = {n: [] for n in range(len(self.vertices))}
        for e in self.edges:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def direction(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int] | None:
    """``(i, j, alpha)`` with ``v - u = alpha (e_i - e_j)``, or ``None``."""
    diff = [b - a for a, b in zip(u, v)]
    nz = [(n, d) for n, d in enumerate(diff) if d]
    if len(nz) != 2 or nz[0][1] != -nz[1][1]:
        return None
    (p, dp), (q, dq) = nz
    return (p + 1, q + 1, dp) if dp > 0 else (q + 1, p + 1, dq)


def _graph_from_pairs(vertices: list[Point], pairs: Iterable[tuple[int, int]]) -> SkeletonGraph:
    edges = []
    for a, b in sorted({(min(p), max(p)) for p in pairs}):
        d = direction(vertices[a], vertices[b])
        if d is None:
            raise InvariantError(f"edge {vertices[a]} - {vertices[b]} is not parallel to some e_i - e_j")
        edges.append(Edge(a, b, *d))
    return SkeletonGraph(vertices, edges)


def candidate_pairs(vertices: Sequence[Point]) -> Iterator[tuple[int, int]]:
    """Index pairs ``a < b`` whose difference is a multiple of some ``e_i - e_j``."""
    index = {v: n for n, v in enumerate(vertices)}
    r = len(vertices[0]) if vertices else 0
    for a, u in enumerate(vertices):
        for j in range(r):
            for alpha in range(1, u[j] + 1):
                for i in range(r):
                    if i == j:
                        continue
                    w = list(u)
                    w[i] += alpha
                    w[j] -= alpha
                    b = index.get(tuple(w))
                    if b is not None and b > a:
                        yield a, b


class _FaceColumns:
    """Vertices lying on the smallest face that contains a given pair of vertices.

    A face of the polytope is cut out by the subset inequalities and
    nonnegativity constraints tight at both endpoints; the tight subsets form
    a union/intersection-closed family, so checking the minimal tight set of
    every element is enough.
    """

    def __init__(self, F: SimplexFamily, V: np.ndarray):
        self.r = F.ground_size
        self.V = V
        rank = family.rank_table(F)
        sums = kernels.subset_sums(V, self.r, dtype=np.int16)
        self.tight = sums == rank[None, :].astype(np.int16)

    def __call__(self, a: int, b: int) -> np.ndarray:
        both = self.tight[a] & self.tight[b]
        gens = np.unique(kernels.min_tight_sets(both, self.r))
        keep = np.ones(self.V.shape[0], dtype=bool)
        for g in gens:
            keep &= self.tight[:, g]
        zero = (self.V[a] == 0) & (self.V[b] == 0)
        if zero.any():
            keep &= (self.V[:, zero] == 0).all(axis=1)
        return np.flatnonzero(keep)


def _certify(args) -> list[tuple[int, int]]:
    vertices, chunk, columns = args
    out = []
    for a, b, cols in chunk:
        pool = vertices if cols is None else [vertices[c] for c in cols]
        if exactlp.is_edge(vertices[a], vertices[b], pool):
            out.append((a, b))
    return out


def build_skeleton(F: SimplexFamily, *, max_vertices: int = DEFAULT_MAX_VERTICES,
                   columns: str = "face", workers: int = 1) -> SkeletonGraph:
    """Edge graph of the polytope, every edge certified by an exact LP.

    ``columns="face"`` hands the LP only the vertices of the smallest face that
    contains both endpoints (an exact reduction: any representation of the
    midpoint lives on that face); ``columns="all"`` passes every vertex.
    """
    if columns not in ("face", "all"):
        raise DomainError(f"columns must be 'face' or 'all', not {columns!r}")
    V = repfn.vertex_array(F)
    if V.shape[0] > max_vertices:
        raise CapabilityError(
            f"{V.shape[0]} vertices exceed the skeleton budget of {max_vertices}", stage="skeleton"
        )
    vertices = [tuple(int(x) for x in row) for row in V]
    face = _FaceColumns(F, V) if columns == "face" else None
    jobs = [(a, b, None if face is None else face(a, b).tolist()) for a, b in candidate_pairs(vertices)]
    if workers > 1 and len(jobs) > 64:
        from concurrent.futures import ProcessPoolExecutor

        size = -(-len(jobs) // (4 * workers))
        chunks = [(vertices, jobs[s : s + size], columns) for s in range(0, len(jobs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pairs = [p for part in pool.map(_certify, chunks) for p in part]
    else:
        pairs = _certify((vertices, jobs, columns))
    G = _graph_from_pairs(vertices, pairs)
    if not G.is_connected():
        raise InvariantError("skeleton graph is disconnected")
    return G


def skeleton_via_exchange(F: SimplexFamily) -> SkeletonGraph:
    """Edge graph from unit exchanges between lattice points.

    At a vertex ``u`` the cone of feasible directions is generated by the
    vectors ``e_a - e_b`` with ``u + e_a - e_b`` a lattice point of the polytope;
    its extreme rays are the arcs of the transitive reduction of that digraph.
    Each extreme ray is followed as far as lattice points continue.
    """
    lattice = set(repfn.integer_points(F))
    vertices = repfn.vertices(F)
    index = {v: n for n, v in enumerate(vertices)}
    r = F.ground_size
    pairs = []
    for a, u in enumerate(vertices):
        succ: dict[int, set[int]] = {x: set() for x in range(r)}
        for s in range(r):
            if u[s] == 0:
                continue
            for t in range(r):
                if t != s:
                    w = list(u)
                    w[t] += 1
                    w[s] -= 1
                    if tuple(w) in lattice:
                        succ[t].add(s)
        for t in range(r):
            for s in succ[t]:
                if _reachable_avoiding(succ, t, s):
                    continue
                w = list(u)
                alpha = 0
                while w[s] > 0:
                    w[t] += 1
                    w[s] -= 1
                    if tuple(w) not in lattice:
                        break
                    alpha += 1
                end = list(u)
                end[t] += alpha
                end[s] -= alpha
                b = index.get(tuple(end))
                if b is None:
                    raise InvariantError(f"extreme ray from {u} ends at non-vertex {tuple(end)}")
                pairs.append((a, b))
    return _graph_from_pairs(vertices, pairs)


def _reachable_avoiding(succ: dict[int, set[int]], src: int, dst: int) -> bool:
    """Is ``dst`` reachable from ``src`` without using the arc ``src -> dst``?"""
    stack = [x for x in succ[src] if x != dst]
    seen = set(stack)
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in succ[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


# --- ordered partitions ------------------------------------------------------

def set_partitions(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        for n in range(len(part)):
            yield part[:n] + [[first] + part[n]] + part[n + 1 :]
        yield [[first]] + part


def ordered_partitions(elements: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every ordered partition of ``elements`` into nonempty blocks."""
    for part in set_partitions(list(elements)):
        blocks = [tuple(sorted(b)) for b in part]
        yield from itertools.permutations(blocks)


def _check_partition_size(F: SimplexFamily, what: str) -> tuple[int, ...]:
    if F.ground_size > MAX_PARTITION_R:
        raise CapabilityError(f"{what} enumerates ordered partitions; needs r <= {MAX_PARTITION_R}",
                              stage=what)
    return F.support()


def distinct_faces(F: SimplexFamily) -> dict[tuple[tuple[int, ...], ...], SimplexFamily]:
    """All faces of the polytope, keyed by the sorted multiset of their simplices.

    Ground elements outside the support never enter a face family, so only
    ordered partitions of the support are enumerated; the remaining elements
    can join any block without changing the face.
    """
    support = _check_partition_size(F, "face enumeration")
    rest = tuple(e for e in range(1, F.ground_size + 1) if e not in set(support))
    faces: dict[tuple[tuple[int, ...], ...], SimplexFamily] = {}
    for blocks in ordered_partitions(support):
        C = OrderedPartition(tuple(frozenset(b) for b in blocks[:-1]) + (frozenset(blocks[-1] + rest),))
        face = family.face_family(F, C)
        faces.setdefault(tuple(sorted(face.sets)), face)
    return faces


def skeleton_via_partitions(F: SimplexFamily) -> SkeletonGraph:
    """Edges as the one-dimensional faces produced by ordered partitions."""
    faces = distinct_faces(F)
    vertices = repfn.vertices(F)
    index = {v: n for n, v in enumerate(vertices)}
    pairs = []
    for face in faces.values():
        if family.dimension(face) != 1:
            continue
        ends = repfn.vertices(face)
        if len(ends) != 2:
            raise InvariantError(f"one-dimensional face {face} has {len(ends)} vertices")
        pairs.append((index[ends[0]], index[ends[1]]))
    return _graph_from_pairs(vertices, pairs)


def f_vector(F: SimplexFamily) -> FPolynomial:
    """Face counts by dimension, the polytope itself included as its top face.

    Faces are identified by their vertex sets.
    """
    by_vertices: dict[frozenset[Point], int] = {}
    for face in distinct_faces(F).values():
        by_vertices.setdefault(frozenset(repfn.vertices(face)), family.dimension(face))
    tally = Counter(by_vertices.values())
    top = max(tally)
    return FPolynomial(tuple(tally.get(d, 0) for d in range(top + 1)))


# --- degrees and vertex digraphs ---------------------------------------------

def degree_histogram(G: SkeletonGraph) -> dict[int, int]:
    return dict(sorted(Counter(G.degrees()).items()))


@dataclass(frozen=True)
class VertexDigraph:
    """Arc ``(i, j)`` whenever ``u + alpha (e_i - e_j)`` is a neighbor of ``u``."""

    r: int
    arcs: frozenset[tuple[int, int]]

    def underlying(self) -> set[frozenset[int]]:
        return {frozenset(a) for a in self.arcs}

    def is_simple(self) -> bool:
        return len(self.underlying()) == len(self.arcs)

    def is_acyclic(self) -> bool:
        succ: dict[int, list[int]] = {}
        indeg = Counter()
        for i, j in self.arcs:
            succ.setdefault(i, []).append(j)
            indeg[j] += 1
        ready = [x for x in range(1, self.r + 1) if indeg[x] == 0]
        done = 0
        while ready:
            x = ready.pop()
            done += 1
            for y in succ.get(x, []):
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        return done == self.r

    def is_triangle_free(self) -> bool:
        und = self.underlying()
        nodes = sorted({x for e in und for x in e})
        return not any(
            frozenset((a, b)) in und and frozenset((a, c)) in und and frozenset((b, c)) in und
            for a, b, c in itertools.combinations(nodes, 3)
        )

    def heads(self) -> set[int]:
        return {j for _, j in self.arcs}


def vertex_digraph(G: SkeletonGraph, u: Sequence[int]) -> VertexDigraph:
    u = tuple(u)
    arcs = set()
    for w in G.neighbors(u):
        i, j, _ = direction(u, w)
        arcs.add((i, j))
    return VertexDigraph(len(u), frozenset(arcs))


# --- two-set sums ------------------------------------------------------------

def _parts(Fa: Iterable[int], Fb: Iterable[int]) -> tuple[set[int], set[int], set[int]]:
    Fa, Fb = set(Fa), set(Fb)
    if not (Fa and Fb):
        raise DomainError("both sets must be nonempty")
    return Fa - Fb, Fa & Fb, Fb - Fa


# parts each type draws its two indices from: 0 = F \ F', 1 = F & F', 2 = F' \ F
_TYPE_PARTS = {"A": (0, 1), "B": (1,), "C": (1, 2), "D": (0, 2)}


def classify_rhombus(Fa: Iterable[int], Fb: Iterable[int], u: Sequence[int]) -> str:
    """Rhombus type ``'A'``-``'D'`` of a vertex ``e_i + e_j`` of a two-simplex sum."""
    left, mid, right = _parts(Fa, Fb)
    support = [n + 1 for n, x in enumerate(u) for _ in range(x)]
    if len(support) != 2 or any(x < 0 for x in u):
        raise DomainError(f"{tuple(u)} is not of the form e_i + e_j")
    i, j = support
    if i == j:
        if i in mid:
            return "B"
    else:
        for a, b in ((i, j), (j, i)):
            if a in left and b in mid:
                return "A"
            if a in mid and b in right:
                return "C"
            if a in left and b in right:
                return "D"
    raise DomainError(f"{tuple(u)} is not a vertex of the sum")


def two_sum_degree(Fa: Iterable[int], Fb: Iterable[int], t: str) -> int:
    """Degree of a vertex of rhombus type ``t`` in the sum of two simplices."""
    parts = _parts(Fa, Fb)
    if t not in _TYPE_PARTS:
        raise DomainError(f"unknown rhombus type {t!r}")
    if not all(parts[p] for p in _TYPE_PARTS[t]):
        raise DomainError(f"type {t} does not occur for these sets")
    Fa, Fb = set(Fa), set(Fb)
    if t in ("A", "B", "C"):
        return len(Fa | Fb) - 1
    return len(Fa) + len(Fb) - 2
