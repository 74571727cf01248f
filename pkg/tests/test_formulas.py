from fractions import Fraction

import pytest

from minksum import corpus, formulas, skeleton
from minksum.errors import CapabilityError, DomainError
from minksum.family import SimplexFamily
from minksum.formulas import TwoSumStats
from minksum.polynomial import FPolynomial


def test_two_sum_counts():
    worked = TwoSumStats.of({1, 2, 3}, {1, 2, 4})
    assert worked == (1, 1, 2)
    assert formulas.two_sum_vertex_count(worked) == 7
    assert formulas.two_sum_edge_count(worked) == 11
    rh = TwoSumStats.of({1, 2}, {2, 3})
    assert formulas.two_sum_vertex_count(rh) == 4 and formulas.two_sum_edge_count(rh) == 4
    assert formulas.two_sum_vertex_count(TwoSumStats(3, 2, 0)) == 6


def test_vertex_count_forms_agree():
    for x in range(6):
        for y in range(6):
            for z in range(6):
                s = TwoSumStats(x, y, z)
                assert formulas.two_sum_vertex_count(s) == formulas.two_sum_vertex_count_alt(s)


def test_two_sum_f_polynomial():
    assert formulas.two_sum_f_polynomial({1, 2, 3}, {1, 2, 4}) == FPolynomial((7, 11, 6, 1))
    assert formulas.two_sum_f_polynomial({1, 2}, {2, 3}) == FPolynomial.simplex(2) * FPolynomial.simplex(2)
    assert formulas.two_sum_f_polynomial({1, 2}, {3, 4, 5}) == FPolynomial.simplex(2) * FPolynomial.simplex(3)


def test_two_sum_f_polynomial_matches_faces():
    for Fa, Fb in corpus.two_set_pairs(5):
        assert formulas.two_sum_f_polynomial(Fa, Fb) == skeleton.f_vector(SimplexFamily(5, (Fa, Fb)))


def test_f0_matches_vertex_count_r7():
    for Fa, Fb in corpus.two_set_pairs(7):
        f = formulas.two_sum_f_polynomial(Fa, Fb)
        assert f[0] == formulas.two_sum_vertex_count(TwoSumStats.of(Fa, Fb))


def test_average_degree():
    assert formulas.average_degree(TwoSumStats(0, 3, 2)) == 4
    assert formulas.average_degree(TwoSumStats(2, 3, 1)) == 5
    assert formulas.average_degree(TwoSumStats(3, 0, 2)) == 4
    avg = formulas.average_degree(TwoSumStats(2, 2, 3))
    assert 6 < avg < Fraction(10, 9) * 6
    with pytest.raises(DomainError):
        formulas.average_degree(TwoSumStats(2, 2, 0))


def test_average_degree_matches_skeleton():
    for x, y, z in [(1, 1, 2), (2, 1, 2), (1, 2, 3), (2, 2, 2)]:
        common = tuple(range(x + y + 1, x + y + z + 1))
        F = SimplexFamily(x + y + z, (tuple(range(1, x + 1)) + common, tuple(range(x + 1, x + y + 1)) + common))
        G = skeleton.build_skeleton(F)
        assert formulas.average_degree(TwoSumStats(x, y, z)) == Fraction(sum(G.degrees()), len(G.vertices))


def test_f_decompose():
    got = formulas.f_decompose(FPolynomial((2, 1)), FPolynomial((4, 4, 1)), FPolynomial((1,)))
    assert got == FPolynomial((7, 11, 6, 1))
    a, b = FPolynomial((2, 1)), FPolynomial((3, 3, 1))
    assert formulas.f_decompose(a, b, FPolynomial()) == a * b


def test_degree_maxima():
    assert formulas.d_max(7) == 12
    assert formulas.d_k_max(2, 5) == 6
    for r in range(2, 12):
        assert formulas.d_max(r) == formulas.d_k_max(r // 2, r)
    with pytest.raises(DomainError):
        formulas.d_k_max(3, 5)
    with pytest.raises(DomainError):
        formulas.d_max(0)


def test_lower_bound_family():
    assert formulas.lower_bound_family(2, 5).sets == ((1, 3, 4, 5), (2, 3, 4, 5))
    G = skeleton.build_skeleton(formulas.lower_bound_family(1, 5))
    assert set(G.degrees()) == {4}
    G6 = skeleton.build_skeleton(formulas.lower_bound_family(3, 6))
    assert max(G6.degrees()) == 9
    assert dict(zip(G6.vertices, G6.degrees()))[(1, 1, 1, 0, 0, 0)] == 9


def test_mantel():
    assert formulas.mantel_brute(4, 2).max_edges == 4
    assert formulas.mantel_brute(5, 1).max_edges == 4
    for n in range(2, 8):
        assert formulas.mantel_extremal(n, n // 2) == n * n // 4
    assert len(formulas.complete_bipartite_masks(4, 2)) == 3
    with pytest.raises(CapabilityError):
        formulas.mantel_brute(8, 2)
    with pytest.raises(DomainError):
        formulas.mantel_extremal(4, 3)


def test_mantel_against_networkx_oracle():
    nx = pytest.importorskip("networkx")
    import itertools

    n = 5
    pairs = list(itertools.combinations(range(n), 2))
    for k in (1, 2):
        best, arg = -1, set()
        for mask in range(1 << len(pairs)):
            G = nx.Graph()
            G.add_nodes_from(range(n))
            G.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
            if any(len(c) == 3 for c in nx.enumerate_all_cliques(G)):
                continue
            cover = min(len(S) for s in range(n + 1) for S in itertools.combinations(range(n), s)
                        if all(a in S or b in S for a, b in G.edges))
            if cover > k:
                continue
            m = G.number_of_edges()
            if m > best:
                best, arg = m, {mask}
            elif m == best:
                arg.add(mask)
        scan = formulas.mantel_brute(n, k)
        assert scan.max_edges == best and scan.maximizers == arg
