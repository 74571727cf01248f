import pytest

from minksum import corpus, family, formulas, repfn, skeleton
from minksum.errors import CapabilityError, DomainError
from minksum.family import SimplexFamily
from minksum.polynomial import FPolynomial


def test_rhombus(rhombus):
    G = skeleton.build_skeleton(rhombus)
    assert (len(G.vertices), len(G.edges)) == (4, 4)
    assert skeleton.degree_histogram(G) == {2: 4}
    assert frozenset({(1, 1, 0), (0, 1, 1)}) not in G.edge_set()
    assert G.edge_set() == skeleton.skeleton_via_partitions(rhombus).edge_set()


def test_point_and_simplex():
    G = skeleton.build_skeleton(SimplexFamily.of([[1]]))
    assert (len(G.vertices), len(G.edges)) == (1, 0)
    assert skeleton.vertex_digraph(G, (1,)).arcs == frozenset()
    tri = SimplexFamily.of([[1, 2, 3]])
    assert len(skeleton.skeleton_via_partitions(tri).edges) == 3


def test_worked_example(worked):
    G = skeleton.build_skeleton(worked)
    assert len(G.edges) == 11
    assert skeleton.skeleton_via_partitions(worked).edge_set() == G.edge_set()
    assert skeleton.f_vector(worked) == FPolynomial((7, 11, 6, 1))


def test_h3(h3):
    G = skeleton.build_skeleton(h3.family)
    assert (len(G.vertices), len(G.edges)) == (41, 138)
    assert skeleton.degree_histogram(G) == {6: 25, 7: 3, 8: 12, 9: 1}
    f = skeleton.f_vector(h3.family)
    assert f[0] == 41 and f[1] == 138 and f.degree == 6
    assert sum((-1) ** i * c for i, c in enumerate(f.coeffs)) == 1


def test_edge_labels(rhombus):
    G = skeleton.build_skeleton(rhombus)
    for e in G.edges:
        u, v = G.vertices[e.a], G.vertices[e.b]
        assert skeleton.direction(u, v) == (e.i, e.j, e.alpha)
        assert e.alpha >= 1
    assert skeleton.direction((1, 1, 0), (0, 1, 1)) == (3, 1, 1)
    assert skeleton.direction((2, 0, 0), (0, 1, 1)) is None


@pytest.mark.parametrize("a", range(1, 7))
def test_f_vector_of_simplex(a):
    assert skeleton.f_vector(SimplexFamily.of([list(range(1, a + 1))])) == FPolynomial.simplex(a)


def test_f_vector_of_product():
    assert skeleton.f_vector(SimplexFamily.of([[1, 2], [3, 4]])) == FPolynomial((4, 4, 1))


def test_all_constructions_agree():
    fams = corpus.small_corpus() + corpus.k3_corpus()
    for F in fams:
        lp = skeleton.build_skeleton(F).edge_set()
        assert skeleton.skeleton_via_exchange(F).edge_set() == lp, str(F)
        if F.ground_size <= 5:
            assert skeleton.skeleton_via_partitions(F).edge_set() == lp, str(F)


def test_face_restricted_columns_are_exact():
    for F in corpus.k3_corpus()[::4] + [formulas.lower_bound_family(2, 5)]:
        assert skeleton.build_skeleton(F, columns="all").edge_set() == skeleton.build_skeleton(F).edge_set()


def test_workers_do_not_change_result(h3):
    one = skeleton.build_skeleton(h3.family, workers=1)
    two = skeleton.build_skeleton(h3.family, workers=2)
    assert one.vertices == two.vertices and sorted(one.edges) == sorted(two.edges)


def test_budgets():
    big = SimplexFamily.of([list(range(1, 10))] * 2)
    with pytest.raises(CapabilityError) as err:
        skeleton.build_skeleton(big, max_vertices=5)
    assert err.value.stage == "skeleton"
    with pytest.raises(CapabilityError):
        skeleton.f_vector(big)
    with pytest.raises(DomainError):
        skeleton.build_skeleton(SimplexFamily.of([[1]]), columns="some")


def test_vertex_digraph(rhombus):
    G = skeleton.build_skeleton(rhombus)
    assert skeleton.vertex_digraph(G, (0, 2, 0)).arcs == {(1, 2), (3, 2)}
    F = formulas.lower_bound_family(2, 5)
    assert F.sets == ((1, 3, 4, 5), (2, 3, 4, 5))
    D = skeleton.vertex_digraph(skeleton.build_skeleton(F), (1, 1, 0, 0, 0))
    assert len(D.arcs) == 6 and D.heads() <= {1, 2}
    assert D.is_acyclic() and D.is_simple() and D.is_triangle_free()


def test_digraph_predicates():
    D = skeleton.VertexDigraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    assert not D.is_acyclic() and not D.is_triangle_free() and D.is_simple()
    assert not skeleton.VertexDigraph(2, frozenset({(1, 2), (2, 1)})).is_simple()


def test_classify_rhombus():
    assert skeleton.classify_rhombus({1, 2}, {2, 3}, (1, 1, 0)) == "A"
    assert skeleton.classify_rhombus({1, 2}, {2, 3}, (0, 2, 0)) == "B"
    assert skeleton.classify_rhombus({1, 2}, {2, 3}, (0, 1, 1)) == "C"
    assert skeleton.classify_rhombus({1, 2}, {2, 3}, (1, 0, 1)) == "D"
    with pytest.raises(DomainError):
        skeleton.classify_rhombus({1, 2}, {2, 3}, (2, 0, 0))


def test_two_sum_degree():
    assert skeleton.two_sum_degree({1, 2}, {2, 3}, "A") == 2
    assert skeleton.two_sum_degree(range(1, 7), range(2, 8), "D") == 10
    for t in "BC":
        assert skeleton.two_sum_degree({1, 2}, {1, 2, 3, 4}, t) == 3
    with pytest.raises(DomainError):
        skeleton.two_sum_degree({1, 2}, {1, 2, 3}, "D")
    with pytest.raises(DomainError):
        skeleton.two_sum_degree({1, 2}, {2, 3}, "E")


def test_two_sum_degree_on_every_pair():
    for Fa, Fb in corpus.two_set_pairs(4):
        G = skeleton.build_skeleton(SimplexFamily(4, (Fa, Fb)))
        for v, d in zip(G.vertices, G.degrees()):
            assert skeleton.two_sum_degree(Fa, Fb, skeleton.classify_rhombus(Fa, Fb, v)) == d


def test_f_decompose_on_duplicated_signatures():
    for F in corpus.duplicated_signature_corpus():
        A = next(c for c in family.signature_classes(F) if len(c) > 1)
        red = family.reduce(F, A)
        foot = red.foot
        f_foot = skeleton.f_vector(foot) if foot is not None else FPolynomial()
        got = formulas.f_decompose(FPolynomial.simplex(len(A)), skeleton.f_vector(red.family), f_foot)
        assert got == skeleton.f_vector(F), str(F)


def test_faces_dedupe_and_vertex_sets(worked):
    faces = skeleton.distinct_faces(worked)
    by_vertices = {frozenset(repfn.vertices(f)) for f in faces.values()}
    assert len(by_vertices) == 7 + 11 + 6 + 1
