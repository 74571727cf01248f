"""Serialized outputs: vertex lists, analysis reports, DOT graphs."""

from __future__ import annotations

from typing import Sequence

from . import family, formulas, repfn, skeleton
from .errors import CapabilityError
from .family import SimplexFamily
from .skeleton import SkeletonGraph


def vertex_list(F: SimplexFamily, vertices: Sequence[Sequence[int]] | None = None) -> dict:
    vertices = repfn.vertices(F) if vertices is None else sorted(tuple(v) for v in vertices)
    return {"family": F.to_json(), "vertex_count": len(vertices), "vertices": [list(v) for v in vertices]}


def _fmt_point(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def to_dot(G: SkeletonGraph, name: str = "skeleton") -> str:
    degrees = G.degrees()
    lines = [f"graph {name} {{"]
    for n, (v, d) in enumerate(zip(G.vertices, degrees)):
        lines.append(f'  v{n} [label="{_fmt_point(v)} deg {d}"];')
    for e in G.edges:
        lines.append(f'  v{e.a} -- v{e.b} [label="e{e.i}-e{e.j} x{e.alpha}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def analysis_report(F: SimplexFamily, *, max_vertices: int = skeleton.DEFAULT_MAX_VERTICES,
                    max_partition_r: int = skeleton.MAX_PARTITION_R, workers: int = 1) -> tuple[dict, list[str]]:
    """Run every analysis stage that fits the budgets.

    Returns the report and the names of the stages that were skipped because
    a budget was exceeded.
    """
    skipped: list[str] = []
    report: dict = {"family": F.to_json(), "dimension": family.dimension(F)}
    vertices = repfn.vertices(F)
    report["vertex_count"] = len(vertices)
    report["vertices"] = [list(v) for v in vertices]
    checks: dict[str, str] = {}

    G = None
    try:
        G = skeleton.build_skeleton(F, max_vertices=max_vertices, workers=workers)
    except CapabilityError as exc:
        skipped.append(exc.stage or "skeleton")
    if G is not None:
        degrees = G.degrees()
        report["edge_count"] = len(G.edges)
        report["degree_histogram"] = {str(d): c for d, c in skeleton.degree_histogram(G).items()}
        report["max_degree"] = max(degrees, default=0)
        report["max_degree_bound"] = formulas.d_max(F.ground_size)
        checks["handshake"] = _flag(sum(degrees) == 2 * len(G.edges))
        checks["max_degree_within_bound"] = _flag(report["max_degree"] <= report["max_degree_bound"])

    if F.ground_size <= max_partition_r:
        fpoly = skeleton.f_vector(F)
        report["f_vector"] = list(fpoly.coeffs)
        checks["f0_equals_vertex_count"] = _flag(fpoly[0] == len(vertices))
        checks["top_dimension_equals_dimension"] = _flag(fpoly.degree == report["dimension"])
        if G is not None:
            checks["f1_equals_edge_count"] = _flag(fpoly[1] == len(G.edges))
    else:
        skipped.append("face enumeration")

    report["checks"] = checks
    if skipped:
        report["skipped"] = skipped
    return report, skipped


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"
