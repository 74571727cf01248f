"""Integer inner loops: subset tables, rep-function census, small-graph scans.

Every kernel exists twice: a loop version compiled with numba and a vectorized
numpy version. The public wrappers pick one according to ``_accel.USE_NUMBA``;
both are kept importable so the benchmark and the tests can compare them.
All arithmetic here is on machine integers and is exact.
"""

from __future__ import annotations

import numpy as np

from . import _accel
from ._accel import njit

CENSUS_CHUNK = 1 << 20


# --- subset sums -------------------------------------------------------------

@njit
def _subset_sums_nb(points, r, out):
    n = points.shape[0]
    full = 1 << r
    for p in range(n):
        out[p, 0] = 0
        for mask in range(1, full):
            low = mask & (-mask)
            bit = 0
            while (1 << bit) != low:
                bit += 1
            out[p, mask] = out[p, mask ^ low] + points[p, bit]
    return out


def _subset_sums_np(points, r, out):
    acc = np.zeros((points.shape[0], 1), dtype=out.dtype)
    for i in range(r):
        acc = np.concatenate([acc, acc + points[:, i : i + 1].astype(out.dtype)], axis=1)
    out[:] = acc
    return out


def subset_sums(points: np.ndarray, r: int, dtype=np.int16) -> np.ndarray:
    """``out[p, D] = sum(points[p, i] for bit i set in D)`` over all ``2**r`` masks."""
    pts = np.ascontiguousarray(points, dtype=np.int64)
    out = np.empty((pts.shape[0], 1 << r), dtype=dtype)
    if _accel.USE_NUMBA:
        return _subset_sums_nb(pts, r, out)
    return _subset_sums_np(pts, r, out)


# --- polymatroid rank --------------------------------------------------------

@njit
def _rank_table_nb(masks, r):
    full = 1 << r
    out = np.zeros(full, np.int64)
    for d in range(full):
        c = 0
        for j in range(masks.shape[0]):
            if masks[j] & d:
                c += 1
        out[d] = c
    return out


def _rank_table_np(masks, r):
    d = np.arange(1 << r, dtype=np.int64)
    return ((d[None, :] & masks[:, None]) != 0).sum(axis=0).astype(np.int64)


def rank_table(masks: np.ndarray, r: int) -> np.ndarray:
    """Number of set masks meeting ``D``, for every ``D`` in ``[0, 2**r)``."""
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _accel.USE_NUMBA:
        return _rank_table_nb(masks, r)
    return _rank_table_np(masks, r)


# --- rep-function census -----------------------------------------------------

@njit
def _census_keys_nb(table, sizes, base, start, stop):
    k = sizes.shape[0]
    out = np.empty(stop - start, np.int64)
    buf = np.empty(k, np.int64)
    for t in range(start, stop):
        idx = t
        for j in range(k - 1, -1, -1):
            buf[j] = table[j, idx % sizes[j]]
            idx //= sizes[j]
        for a in range(1, k):
            v = buf[a]
            b = a - 1
            while b >= 0 and buf[b] > v:
                buf[b + 1] = buf[b]
                b -= 1
            buf[b + 1] = v
        key = 0
        for j in range(k):
            key = key * base + buf[j]
        out[t - start] = key
    return out


def _census_keys_np(table, sizes, base, start, stop):
    k = sizes.shape[0]
    idx = np.arange(start, stop, dtype=np.int64)
    choice = np.empty((stop - start, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        choice[:, j] = table[j, idx % sizes[j]]
        idx //= sizes[j]
    choice.sort(axis=1)
    weights = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return choice @ weights


def census_keys(table: np.ndarray, sizes: np.ndarray, base: int, start: int, stop: int) -> np.ndarray:
    """Multiset key of every rep-function with lexicographic index in ``[start, stop)``.

    ``table[j, :sizes[j]]`` lists the 0-based elements of set ``j``. The key of a
    rep-function is its sorted choice vector read as base-``base`` digits, so
    two rep-functions share a key exactly when they share an image point.
    """
    table = np.ascontiguousarray(table, dtype=np.int64)
    sizes = np.ascontiguousarray(sizes, dtype=np.int64)
    if _accel.USE_NUMBA:
        return _census_keys_nb(table, sizes, base, start, stop)
    return _census_keys_np(table, sizes, base, start, stop)


def census(table: np.ndarray, sizes: np.ndarray, base: int, total: int,
           chunk: int = CENSUS_CHUNK) -> tuple[np.ndarray, np.ndarray]:
    """Distinct keys with their rep-function counts, merged over index chunks."""
    keys_parts, count_parts = [], []
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        keys, counts = np.unique(census_keys(table, sizes, base, start, stop), return_counts=True)
        keys_parts.append(keys)
        count_parts.append(counts)
    keys = np.concatenate(keys_parts)
    counts = np.concatenate(count_parts)
    if len(keys_parts) == 1:
        return keys, counts
    merged, inverse = np.unique(keys, return_inverse=True)
    return merged, np.bincount(inverse, weights=counts).astype(np.int64)


def decode_keys(keys: np.ndarray, k: int, base: int, r: int) -> np.ndarray:
    """Turn multiset keys back into coordinate rows of length ``r``."""
    keys = np.asarray(keys, dtype=np.int64).copy()
    points = np.zeros((keys.shape[0], r), dtype=np.int64)
    rows = np.arange(keys.shape[0])
    for _ in range(k):
        np.add.at(points, (rows, keys % base), 1)
        keys //= base
    return points


# --- small-graph scan --------------------------------------------------------

def graph_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Edge-bit helper masks for graphs on ``n`` labelled vertices.

    Returns triangle masks, and for every vertex subset ``U`` (ordered by size)
    the mask of edges with no endpoint in ``U`` together with ``|U|``.
    """
    bit = {}
    for a in range(n):
        for b in range(a + 1, n):
            bit[(a, b)] = len(bit)
    tri = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                tri.append((1 << bit[(a, b)]) | (1 << bit[(a, c)]) | (1 << bit[(b, c)]))
    subsets = sorted(range(1 << n), key=lambda u: (bin(u).count("1"), u))
    uncovered, sizes = [], []
    for u in subsets:
        m = 0
        for (a, b), i in bit.items():
            if not (u >> a & 1 or u >> b & 1):
                m |= 1 << i
        uncovered.append(m)
        sizes.append(bin(u).count("1"))
    return (np.array(tri, dtype=np.int64), np.array(uncovered, dtype=np.int64),
            np.array(sizes, dtype=np.int64))


@njit
def _graph_scan_nb(m, tri, uncovered, sizes):
    total = 1 << m
    tri_free = np.zeros(total, np.bool_)
    cover = np.zeros(total, np.int8)
    edges = np.zeros(total, np.int8)
    for g in range(total):
        c = 0
        x = g
        while x:
            x &= x - 1
            c += 1
        edges[g] = c
        ok = True
        for t in tri:
            if g & t == t:
                ok = False
                break
        tri_free[g] = ok
        for u in range(uncovered.shape[0]):
            if g & uncovered[u] == 0:
                cover[g] = sizes[u]
                break
    return tri_free, cover, edges


def _graph_scan_np(m, tri, uncovered, sizes):
    g = np.arange(1 << m, dtype=np.int64)
    edges = np.zeros(g.shape, dtype=np.int8)
    for i in range(m):
        edges += ((g >> i) & 1).astype(np.int8)
    tri_free = np.ones(g.shape, dtype=bool)
    for t in tri:
        tri_free &= (g & t) != t
    cover = np.full(g.shape, -1, dtype=np.int8)
    for u, s in zip(uncovered, sizes):
        hit = (cover < 0) & ((g & u) == 0)
        cover[hit] = s
    return tri_free, cover, edges


def graph_scan(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For every graph on ``n`` vertices (edge bitmask): triangle-free flag,
    minimum vertex cover size, and edge count."""
    m = n * (n - 1) // 2
    tri, uncovered, sizes = graph_tables(n)
    if _accel.USE_NUMBA:
        return _graph_scan_nb(m, tri, uncovered, sizes)
    return _graph_scan_np(m, tri, uncovered, sizes)


# --- tight-set closure -------------------------------------------------------

@njit
def _min_tight_sets_nb(tight, r):
    acc = np.full(r, (1 << r) - 1, np.int64)
    for d in range(tight.shape[0]):
        if tight[d]:
            for b in range(r):
                if (d >> b) & 1:
                    acc[b] &= d
    return acc


def _min_tight_sets_np(tight, r):
    d = np.flatnonzero(tight).astype(np.int64)
    acc = np.full(r, (1 << r) - 1, dtype=np.int64)
    for b in range(r):
        sel = d[(d >> b) & 1 == 1]
        if sel.size:
            acc[b] = np.bitwise_and.reduce(sel)
    return acc


def min_tight_sets(tight: np.ndarray, r: int) -> np.ndarray:
    """For each element ``b``, the intersection of all flagged masks containing ``b``.

    ``tight`` is a boolean vector over the ``2**r`` subset masks.
    """
    tight = np.ascontiguousarray(tight, dtype=np.bool_)
    if _accel.USE_NUMBA:
        return _min_tight_sets_nb(tight, r)
    return _min_tight_sets_np(tight, r)
