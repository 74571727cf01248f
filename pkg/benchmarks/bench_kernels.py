"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Each kernel is warmed up once (compilation excluded), outputs of both
versions are compared, then the best of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from minksum import kernels
from minksum.master import build_master


def _census_inputs(k):
    F = build_master(k).family
    width = max(len(s) for s in F.sets)
    table = np.zeros((F.k, width), dtype=np.int64)
    for j, s in enumerate(F.sets):
        table[j, : len(s)] = [e - 1 for e in s]
    sizes = np.array([len(s) for s in F.sets], dtype=np.int64)
    return table, sizes, F.ground_size, int(np.prod(sizes))


def cases():
    table, sizes, base, total = _census_inputs(5)
    stop = min(total, 1 << 20)
    yield ("census keys P(5), 2^20 rep-functions",
           lambda: kernels._census_keys_nb(table, sizes, base, 0, stop),
           lambda: kernels._census_keys_np(table, sizes, base, 0, stop))

    pts = np.random.default_rng(0).integers(0, 4, size=(2000, 12)).astype(np.int64)
    out = np.empty((2000, 1 << 12), np.int64)
    yield ("subset sums 2000 points, r=12",
           lambda: kernels._subset_sums_nb(pts, 12, out.copy()),
           lambda: kernels._subset_sums_np(pts, 12, out.copy()))

    masks = np.random.default_rng(1).integers(1, 1 << 16, size=5).astype(np.int64)
    yield ("rank table r=16, k=5",
           lambda: kernels._rank_table_nb(masks, 16),
           lambda: kernels._rank_table_np(masks, 16))

    tri, unc, sz = kernels.graph_tables(7)
    yield ("graph scan n=7 (2^21 graphs)",
           lambda: kernels._graph_scan_nb(21, tri, unc, sz),
           lambda: kernels._graph_scan_np(21, tri, unc, sz))

    tight = np.random.default_rng(2).random(1 << 15) < 0.05
    yield ("minimal tight sets r=15",
           lambda: kernels._min_tight_sets_nb(tight, 15),
           lambda: kernels._min_tight_sets_np(tight, 15))


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", help="also write results to this file")
    args = p.parse_args(argv)

    rows = []
    print(f"{'kernel':<40} {'numba s':>9} {'numpy s':>9} {'speedup':>8}  equal")
    for name, nb, npf in cases():
        equal = _same(nb(), npf())  # also compiles the numba version
        t_nb, t_np = _best(nb, args.repeat), _best(npf, args.repeat)
        rows.append({"kernel": name, "numba_s": t_nb, "numpy_s": t_np, "equal": bool(equal)})
        print(f"{name:<40} {t_nb:>9.4f} {t_np:>9.4f} {t_np / t_nb:>7.1f}x  {equal}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["equal"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
