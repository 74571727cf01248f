"""Master polytopes: every nonempty subset of ``[k]`` occurs as exactly one signature.

Any family of ``k`` sets projects onto the master family by summing the
coordinates that share a signature. Vertex and edge questions about the
family then reduce to questions about the master polytope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import repfn
from .errors import DomainError, PreconditionError
from .family import SimplexFamily, signatures
from .skeleton import SkeletonGraph

MAX_K = 5

PAPER3_LABELS = ({1, 2, 3}, {1, 2}, {2, 3}, {1, 3}, {1}, {2}, {3})


@dataclass(frozen=True)
class MasterFamily:
    k: int
    labels: tuple[frozenset[int], ...]  # labels[i - 1] is the signature of coordinate i
    family: SimplexFamily

    def coordinate_of(self, signature: frozenset[int]) -> int | None:
        """1-based master coordinate carrying ``signature``."""
        try:
            return self.labels.index(frozenset(signature)) + 1
        except ValueError:
            return None


def canonical_labels(k: int) -> list[frozenset[int]]:
    """Nonempty subsets of ``[k]`` by descending size, then lexicographically."""
    out = []
    for size in range(k, 0, -1):
        out.extend(frozenset(c) for c in itertools.combinations(range(1, k + 1), size))
    return out


def build_master(k: int, labeling: str = "canonical", *, max_k: int = MAX_K) -> MasterFamily:
    if not 1 <= k <= max_k:
        raise DomainError(f"k must lie in [1, {max_k}], got {k}")
    if labeling == "canonical":
        labels = canonical_labels(k)
    elif labeling == "paper3":
        if k != 3:
            raise DomainError("the paper3 labeling exists only for k = 3")
        labels = [frozenset(s) for s in PAPER3_LABELS]
    else:
        raise DomainError(f"unknown labeling {labeling!r}")
    sets = tuple(tuple(i for i, N in enumerate(labels, start=1) if j in N) for j in range(1, k + 1))
    return MasterFamily(k, tuple(labels), SimplexFamily(len(labels), sets))


def h_projection(F: SimplexFamily, u: Sequence[int], M: MasterFamily) -> tuple[int, ...]:
    """Sum the coordinates of ``u`` over each signature class, in master coordinates."""
    if F.k != M.k:
        raise PreconditionError(f"family has {F.k} sets but the master polytope has {M.k}")
    if len(u) != F.ground_size:
        raise DomainError("point length does not match the family's ground size")
    v = [0] * len(M.labels)
    for x, sig in zip(u, signatures(F)):
        if not sig:
            if x:
                raise DomainError("positive coordinate outside the family's support")
            continue
        v[M.coordinate_of(sig) - 1] += x
    return tuple(v)


def shares_signature(F: SimplexFamily, u: Sequence[int]) -> bool:
    """True if two distinct positive coordinates of ``u`` have the same signature."""
    seen = set()
    for x, sig in zip(u, signatures(F)):
        if x > 0:
            if sig in seen:
                return True
            seen.add(sig)
    return False


def is_vertex_via_master(F: SimplexFamily, u: Sequence[int], master_vertices, M: MasterFamily | None = None) -> bool:
    """Vertex test through the master polytope.

    ``u`` must be a point of the polytope of ``F``. It is a vertex iff no two
    of its positive coordinates share a signature and its projection is a
    vertex of the master polytope.
    """
    M = M or build_master(F.k)
    if shares_signature(F, u):
        return False
    return h_projection(F, u, M) in set(map(tuple, master_vertices))


def edge_type_violations(F: SimplexFamily, G: SkeletonGraph, master_skeleton: SkeletonGraph,
                         M: MasterFamily) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Edges of ``G`` whose projected endpoints are distinct and not adjacent in the master."""
    master_edges = master_skeleton.edge_set()
    bad = []
    for e in G.edges:
        u, w = G.vertices[e.a], G.vertices[e.b]
        hu, hw = h_projection(F, u, M), h_projection(F, w, M)
        if hu != hw and frozenset((hu, hw)) not in master_edges:
            bad.append((u, w))
    return bad


def edge_types_via_master(F: SimplexFamily, G: SkeletonGraph, master_skeleton: SkeletonGraph,
                          M: MasterFamily | None = None) -> bool:
    M = M or build_master(F.k)
    return not edge_type_violations(F, G, master_skeleton, M)


def master_vertices(M: MasterFamily) -> list[tuple[int, ...]]:
    return repfn.vertices(M.family)


def column_groups(M: MasterFamily, G: SkeletonGraph) -> list[list[tuple[tuple[int, ...], int]]]:
    """Vertices with degrees, grouped by how many singleton-signature coordinates are positive.

    Groups are "none", "exactly one" and "two or more"; for ``k = 3`` these
    are the 10 / 21 / 10 column blocks of the reference vertex table, and
    with the ``paper3`` labeling columns follow that table's order.
    """
    singles = [i for i, N in enumerate(M.labels) if len(N) == 1]
    degrees = G.degrees()
    groups: list[list[tuple[tuple[int, ...], int]]] = [[], [], []]
    for v, d in zip(G.vertices, degrees):
        pattern = tuple(int(v[i] > 0) for i in singles)
        groups[min(sum(pattern), 2)].append((v, d))
    reference = _reference_order(M)
    for g in groups:
        if reference is not None and all(v in reference for v, _ in g):
            g.sort(key=lambda item: reference[item[0]])
        else:
            g.sort(key=lambda item: (tuple(int(item[0][i] > 0) for i in singles), tuple(-x for x in item[0])))
    return [g for g in groups if g]


def _reference_order(M: MasterFamily) -> dict[tuple[int, ...], int] | None:
    """Column positions of the reference table, when ``M`` uses its labeling."""
    if M.labels != tuple(frozenset(s) for s in PAPER3_LABELS):
        return None
    from .tables import P3_TABLE_BLOCKS

    return {v: n for n, (v, _) in enumerate(col for block in P3_TABLE_BLOCKS for col in block)}
