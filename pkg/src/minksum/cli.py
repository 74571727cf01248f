"""Command-line interface: ``minksum {analyze,master,verify,formulas,export-dot}``.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import export, formulas, master, repfn, skeleton, verify
from .errors import CapabilityError, DomainError, InvariantError, MinksumError
from .family import SimplexFamily

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


_FLAT_LIST = re.compile(r"\[[-\d,\s]*\]")


def _dump(obj) -> str:
    """Indented JSON with integer lists kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: json.dumps(json.loads(m.group(0))), text) + "\n"


def _load_family(path: str) -> SimplexFamily:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return SimplexFamily.from_json(text)
    except (DomainError, ValueError, TypeError) as exc:
        raise UsageError(f"malformed family in {path}: {exc}") from exc


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    F = _load_family(args.family)
    report, skipped = export.analysis_report(
        F, max_vertices=args.max_vertices, max_partition_r=args.max_r, workers=args.workers
    )
    _write(args, _dump(report))
    if skipped:
        print(f"budget exceeded, skipped: {', '.join(skipped)}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK if all(v == "PASS" for v in report["checks"].values()) else EXIT_FAIL


def _master_text(M: master.MasterFamily, groups) -> str:
    names = ["".join(str(j) for j in sorted(N)) for N in M.labels]
    head = max(len(n) for n in names + ["deg"])
    out = []
    for g, group in enumerate(groups, start=1):
        width = max(len(str(x)) for v, d in group for x in (*v, d))
        out.append(f"group {g} ({len(group)} vertices)")
        for i, name in enumerate(names):
            out.append(f"{name:>{head}} | " + " ".join(f"{v[i]:>{width}}" for v, _ in group))
        out.append(f"{'deg':>{head}} | " + " ".join(f"{d:>{width}}" for _, d in group))
        out.append("")
    return "\n".join(out)


def cmd_master(args) -> int:
    try:
        M = master.build_master(args.k, args.labels)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    G = skeleton.build_skeleton(M.family, max_vertices=args.max_vertices, workers=args.workers)
    groups = master.column_groups(M, G)
    if args.format == "json":
        doc = {
            "k": M.k,
            "labeling": args.labels,
            "labels": [sorted(N) for N in M.labels],
            "family": M.family.to_json(),
            "vertex_count": len(G.vertices),
            "edge_count": len(G.edges),
            "groups": [{"vertices": [list(v) for v, _ in g], "degrees": [d for _, d in g]} for g in groups],
        }
        _write(args, _dump(doc))
    else:
        _write(args, _master_text(M, groups))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verify.run_suite(args.suite, with_p4=args.with_p4, echo=print)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}") from None
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def _shape_sets(x: int, y: int, z: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    common = tuple(range(x + y + 1, x + y + z + 1))
    return tuple(range(1, x + 1)) + common, tuple(range(x + 1, x + y + 1)) + common


def formula_rows(r_max: int = 5, n_max: int = 7) -> list[dict]:
    """Closed forms against brute-force computation, one row per instance."""
    rows = []

    def add(name, params, want, got):
        rows.append({"check": name, "params": params, "formula": str(want), "brute_force": str(got),
                     "result": "PASS" if want == got else "FAIL"})

    for r in range(1, r_max + 1):
        for x in range(r + 1):
            for y in range(r - x + 1):
                z = r - x - y
                if x + z == 0 or y + z == 0:
                    continue
                Fa, Fb = _shape_sets(x, y, z)
                F = SimplexFamily(r, (Fa, Fb))
                s = formulas.TwoSumStats(x, y, z)
                G = skeleton.build_skeleton(F)
                params = f"x={x} y={y} z={z}"
                add("two-sum vertices", params, formulas.two_sum_vertex_count(s), len(G.vertices))
                add("two-sum edges", params, formulas.two_sum_edge_count(s), len(G.edges))
                add("two-sum f-polynomial", params, formulas.two_sum_f_polynomial(Fa, Fb), skeleton.f_vector(F))
    for r in range(2, n_max + 1):
        for k in range(1, r // 2 + 1):
            F = formulas.lower_bound_family(k, r)
            add("degree at e_1+...+e_k", f"k={k} r={r}", formulas.d_k_max(k, r),
                max(skeleton.skeleton_via_exchange(F).degrees()))
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            scan = formulas.mantel_brute(n, k)
            add("triangle-free, cover <= k", f"n={n} k={k}", formulas.mantel_extremal(n, k), scan.max_edges)
            add("extremal graphs are K_{k,n-k}", f"n={n} k={k}",
                len(formulas.complete_bipartite_masks(n, k)),
                len(scan.maximizers) if scan.maximizers == formulas.complete_bipartite_masks(n, k) else -1)
    return rows


def _table(rows: list[dict]) -> str:
    cols = ["check", "params", "formula", "brute_force", "result"]
    width = {c: max(len(c), *(len(r[c]) for r in rows)) for c in cols}
    lines = ["  ".join(f"{c:<{width[c]}}" for c in cols)]
    lines.append("  ".join("-" * width[c] for c in cols))
    lines.extend("  ".join(f"{r[c]:<{width[c]}}" for c in cols).rstrip() for r in rows)
    return "\n".join(lines) + "\n"


def cmd_formulas(args) -> int:
    rows = formula_rows(args.r_max, args.n_max)
    _write(args, _dump(rows) if args.format == "json" else _table(rows))
    return EXIT_OK if all(r["result"] == "PASS" for r in rows) else EXIT_FAIL


def cmd_export_dot(args) -> int:
    F = _load_family(args.family)
    G = skeleton.build_skeleton(F, max_vertices=args.max_vertices, workers=args.workers)
    _write(args, export.to_dot(G))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes for LP certification (default: available cores)")
    common.add_argument("--budget", type=_positive, default=None,
                        help="rep-function budget (default: $MINKSUM_BUDGET or %d)" % repfn.DEFAULT_BUDGET)
    common.add_argument("--max-vertices", type=_positive, default=skeleton.DEFAULT_MAX_VERTICES,
                        help="largest vertex count for the LP skeleton (default: %(default)s)")
    common.add_argument("--max-r", type=_positive, default=skeleton.MAX_PARTITION_R,
                        help="largest r for ordered-partition face enumeration (default: %(default)s)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="minksum", description="Minkowski sums of standard simplices.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="JSON report for a family file")
    a.add_argument("family", help='family JSON such as {"r": 4, "sets": [[1,2,3],[1,2,4]]}; "-" reads stdin')
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("master", parents=[common], help="vertex table of a master polytope")
    m.add_argument("--k", type=_positive, default=3)
    m.add_argument("--labels", choices=["canonical", "paper3"], default="canonical")
    m.add_argument("--format", choices=["text", "json"], default="text")
    m.set_defaults(func=cmd_master)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help=f"one of: {', '.join(verify.SUITES)}")
    v.add_argument("--with-p4", action="store_true", help="include the slower P(4) degree check")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formulas", parents=[common], help="closed forms against brute force")
    f.add_argument("--r-max", type=_positive, default=5, help="largest r for two-sum shapes")
    f.add_argument("--n-max", type=_positive, default=formulas.MAX_MANTEL_N,
                   help="largest n for the degree and graph scans")
    f.add_argument("--format", choices=["text", "json"], default="text")
    f.set_defaults(func=cmd_formulas)

    d = sub.add_parser("export-dot", parents=[common], help="skeleton of a family in DOT")
    d.add_argument("family")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("MINKSUM_BUDGET")
    if args.budget is not None:
        os.environ["MINKSUM_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"minksum: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"minksum: budget exceeded in stage {exc.stage or 'unknown'}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"minksum: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except MinksumError as exc:
        print(f"minksum: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if saved is None:
            os.environ.pop("MINKSUM_BUDGET", None)
        else:
            os.environ["MINKSUM_BUDGET"] = saved


if __name__ == "__main__":
    sys.exit(main())
