"""End-to-end checks of the reference counts, tables and bounds.

Each check returns a :class:`CheckResult`; ``run_suite`` drives them for the
``verify`` subcommand and the acceptance tests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable

import numpy as np

from . import corpus, family, formulas, master, repfn, skeleton, tables
from .family import SimplexFamily
from .polynomial import FPolynomial


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key:<4} {self.title} ({self.seconds:.1f}s) {self.detail}"


def master_vertex_counts(ks=(3, 4, 5)) -> tuple[bool, str]:
    got = {k: len(repfn.vertex_array(master.build_master(k).family)) for k in ks}
    want = {k: tables.MASTER_VERTEX_COUNTS[k] for k in ks}
    return got == want, f"vertex counts {got}"


def p3_table() -> tuple[bool, str]:
    M = master.build_master(3, "paper3")
    G = skeleton.build_skeleton(M.family)
    degrees = dict(zip(G.vertices, G.degrees()))
    same_set = set(degrees) == set(tables.P3_VERTEX_DEGREES)
    same_deg = degrees == tables.P3_VERTEX_DEGREES
    hist = skeleton.degree_histogram(G)
    handshake = sum(degrees.values()) == 2 * len(G.edges)
    ok = same_set and same_deg and hist == tables.P3_DEGREE_HISTOGRAM and len(G.edges) == 138 and handshake
    return ok, (f"{len(G.vertices)} vertices (table match: {same_set}, degrees match: {same_deg}), "
                f"histogram {hist}, {len(G.edges)} edges")


def p4_degree_set() -> tuple[bool, str]:
    G = skeleton.build_skeleton(master.build_master(4).family)
    degs = set(G.degrees())
    return degs == tables.P4_DEGREE_SET, f"{len(G.vertices)} vertices, {len(G.edges)} edges, degrees {sorted(degs)}"


def worked_example() -> tuple[bool, str]:
    F = SimplexFamily.of([[1, 2, 3], [1, 2, 4]])
    want = FPolynomial((7, 11, 6, 1))
    by_faces = skeleton.f_vector(F)
    red = family.reduce(F, (1, 2))
    f_red = skeleton.f_vector(red.family)
    foot = red.foot
    f_foot = skeleton.f_vector(foot) if foot is not None else FPolynomial()
    by_decomposition = formulas.f_decompose(FPolynomial.simplex(2), f_red, f_foot)
    literal = formulas.f_decompose(FPolynomial((2, 1)), FPolynomial((4, 4, 1)), FPolynomial((1,)))
    ok = by_faces == want and by_decomposition == want and literal == want
    return ok, f"faces: {by_faces}; decomposition: {by_decomposition}; literal: {literal}"


def two_sum_closed_forms(r: int = 6) -> tuple[bool, str]:
    pairs = bad_counts = bad_degrees = diagonal = 0
    for Fa, Fb in corpus.two_set_pairs(r):
        pairs += 1
        G = skeleton.build_skeleton(SimplexFamily(r, (Fa, Fb)))
        stats = formulas.TwoSumStats.of(Fa, Fb)
        if (len(G.vertices), len(G.edges)) != (formulas.two_sum_vertex_count(stats),
                                                formulas.two_sum_edge_count(stats)):
            bad_counts += 1
        types = [skeleton.classify_rhombus(Fa, Fb, v) for v in G.vertices]
        for t, d in zip(types, G.degrees()):
            if d != skeleton.two_sum_degree(Fa, Fb, t):
                bad_degrees += 1
        if not (stats.x and stats.y and stats.z):
            continue
        for e in G.edges:
            if {types[e.a], types[e.b]} in ({"A", "C"}, {"B", "D"}):
                diagonal += 1
    ok = bad_counts == bad_degrees == diagonal == 0
    return ok, (f"{pairs} pairs: count mismatches {bad_counts}, degree mismatches {bad_degrees}, "
                f"AC/BD edges {diagonal}")


def compositions(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of length ``parts`` summing to ``total``."""
    rows = []
    for bars in combinations_with_replacement(range(parts), total):
        v = [0] * parts
        for b in bars:
            v[b] += 1
        rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(-1, parts)


def integer_point_oracle(families=None) -> tuple[bool, str]:
    families = corpus.small_corpus() if families is None else families
    bad = []
    for F in families:
        box = compositions(F.k, F.ground_size)
        inside = box[family.contains_points(F, box)]
        by_inequalities = {tuple(int(x) for x in p) for p in inside}
        if by_inequalities != set(repfn.integer_points(F)):
            bad.append(str(F))
    return not bad, f"{len(families)} families, mismatches {bad[:3]}"


def degree_theory(r_max: int = 7) -> tuple[bool, str]:
    fams = corpus.small_corpus() + corpus.k3_corpus()
    fams += [master.build_master(k).family for k in (1, 2, 3)]
    over_bound = digraph_bad = 0
    for F in fams:
        G = skeleton.build_skeleton(F)
        if max(G.degrees(), default=0) > formulas.d_max(F.ground_size):
            over_bound += 1
        for u in G.vertices:
            D = skeleton.vertex_digraph(G, u)
            heads_ok = D.heads() <= {i + 1 for i, x in enumerate(u) if x > 0}
            if not (D.is_acyclic() and D.is_simple() and D.is_triangle_free() and heads_ok):
                digraph_bad += 1
    lower_bad = []
    for r in range(2, r_max + 1):
        for k in range(1, r // 2 + 1):
            G = skeleton.build_skeleton(formulas.lower_bound_family(k, r))
            apex = tuple([1] * k + [0] * (r - k))
            degs = dict(zip(G.vertices, G.degrees()))
            others_ok = all(d == r - 1 for v, d in degs.items() if v != apex)
            if not (degs[apex] == formulas.d_k_max(k, r) == max(degs.values()) and others_ok):
                lower_bad.append((k, r))
    ok = over_bound == digraph_bad == 0 and not lower_bad
    return ok, (f"{len(fams)} skeletons: over floor(r^2/4) {over_bound}, bad vertex digraphs {digraph_bad}; "
                f"lower-bound families failing {lower_bad}")


def mantel_variant(n_max: int = 7) -> tuple[bool, str]:
    results = {(n, k): formulas.verify_mantel_brute(n, k)
               for n in range(2, n_max + 1) for k in range(1, n // 2 + 1)}
    failed = [nk for nk, ok in results.items() if not ok]
    return not failed, f"{len(results)} (n, k) cases, failures {failed}"


def master_reduction(families=None) -> tuple[bool, str]:
    families = corpus.k3_corpus() if families is None else families
    M = master.build_master(3)
    mverts = set(master.master_vertices(M))
    mskel = skeleton.build_skeleton(M.family)
    vertex_bad = edge_bad = 0
    for F in families:
        mult = repfn.multiplicity_map(F)
        for u, c in mult.items():
            if master.is_vertex_via_master(F, u, mverts, M) != (c == 1):
                vertex_bad += 1
        G = skeleton.build_skeleton(F)
        edge_bad += len(master.edge_type_violations(F, G, mskel, M))
    return vertex_bad == edge_bad == 0, (f"{len(families)} families: vertex disagreements {vertex_bad}, "
                                        f"edge-type violations {edge_bad}")


def average_degree_bounds(r_max: int = 40) -> tuple[bool, str]:
    bad = []
    checked = 0
    for r, s, avg in formulas.average_degree_scan(r_max):
        if r < 2:
            continue
        checked += 1
        boundary = s.x == 0 or s.y == 0 or s.z == 1
        if not (r - 1 <= avg < Fraction(10, 9) * (r - 1)) or (avg == r - 1) != boundary:
            bad.append((r, tuple(s)))
    return not bad, f"{checked} shapes (2 <= r <= {r_max}), violations {bad[:3]}"


CHECKS: dict[str, tuple[str, Callable[[], tuple[bool, str]]]] = {
    "C1": ("master vertex counts 41/1015/59072", master_vertex_counts),
    "C2": ("P(3) table, degrees and 138 edges", p3_table),
    "C3": ("P(4) degree set", p4_degree_set),
    "C4": ("worked example f-polynomial", worked_example),
    "C5": ("two-sum closed forms, r <= 6", two_sum_closed_forms),
    "C6": ("integer points equal rep-function images", integer_point_oracle),
    "C7": ("degree bounds and vertex digraphs", degree_theory),
    "C8": ("Mantel variant, n <= 7", mantel_variant),
    "C9": ("master reduction of vertices and edges", master_reduction),
    "C10": ("average degree bounds, r <= 40", average_degree_bounds),
}

SUITES = {
    "paper": [k for k in CHECKS if k != "C3"],
    "quick": ["C2", "C4", "C6", "C8", "C10"],
}


def run_check(key: str) -> CheckResult:
    title, fn = CHECKS[key]
    t0 = time.perf_counter()
    passed, detail = fn()
    return CheckResult(key, title, bool(passed), detail, time.perf_counter() - t0)


def run_suite(name: str, *, with_p4: bool = False, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(name)
    keys = list(SUITES[name])
    if with_p4:
        keys.insert(2, "C3")
    out = []
    for key in keys:
        res = run_check(key)
        if echo:
            echo(res.line())
        out.append(res)
    return out
