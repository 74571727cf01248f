import pytest

from minksum import master, repfn, skeleton, tables
from minksum.errors import DomainError, PreconditionError
from minksum.family import SimplexFamily


def test_build_master():
    H = master.build_master(3, "paper3")
    assert H.family.sets == ((1, 2, 4, 5), (1, 2, 3, 6), (1, 3, 4, 7))
    assert len(repfn.vertices(master.build_master(2).family)) == 4
    P1 = master.build_master(1)
    assert P1.family.sets == ((1,),) and len(repfn.vertices(P1.family)) == 1
    with pytest.raises(DomainError):
        master.build_master(6)
    with pytest.raises(DomainError):
        master.build_master(4, "paper3")
    with pytest.raises(DomainError):
        master.build_master(3, "other")


def test_canonical_labels():
    labels = master.canonical_labels(3)
    assert labels[0] == {1, 2, 3} and [len(N) for N in labels] == [3, 2, 2, 2, 1, 1, 1]
    assert len(master.canonical_labels(5)) == 31


def test_h_projection():
    M2 = master.build_master(2)
    F = SimplexFamily.of([[1, 2], [2, 3]])
    v = master.h_projection(F, (0, 1, 1), M2)
    assert v[M2.coordinate_of({1}) - 1] == 0
    assert v[M2.coordinate_of({1, 2}) - 1] == 1
    assert v[M2.coordinate_of({2}) - 1] == 1
    dup = master.h_projection(SimplexFamily.of([[1, 2], [1, 2]]), (1, 1), M2)
    assert dup[M2.coordinate_of({1, 2}) - 1] == 2 and sum(dup) == 2
    with pytest.raises(PreconditionError):
        master.h_projection(SimplexFamily.of([[1]]), (1,), M2)


def test_projection_of_master_is_identity(h3):
    for u in repfn.integer_points(h3.family):
        assert master.h_projection(h3.family, u, h3) == u


def test_is_vertex_via_master(h3):
    mverts = master.master_vertices(h3)
    assert not master.is_vertex_via_master(h3.family, (0, 1, 1, 1, 0, 0, 0), mverts, h3)
    dup = SimplexFamily.of([[1, 2], [1, 2]])
    assert master.shares_signature(dup, (1, 1))
    assert not master.is_vertex_via_master(dup, (1, 1), master.master_vertices(master.build_master(2)))
    assert master.is_vertex_via_master(dup, (2, 0), master.master_vertices(master.build_master(2)))


def test_edge_types_for_master_itself(h3):
    G = skeleton.build_skeleton(h3.family)
    assert master.edge_types_via_master(h3.family, G, G, h3)


def test_edge_types_for_two_set_families():
    M2 = master.build_master(2)
    mskel = skeleton.build_skeleton(M2.family)
    for sets in ([[1, 2], [2, 3]], [[1, 2, 3], [1, 2, 4]], [[1, 2, 3, 4], [3, 4, 5]], [[1], [1, 2]]):
        F = SimplexFamily.of(sets)
        assert master.edge_types_via_master(F, skeleton.build_skeleton(F), mskel, M2)


def test_labeling_invariance(h3):
    canon = master.build_master(3)
    perm = [canon.coordinate_of(N) - 1 for N in h3.labels]
    move = lambda v: tuple(v[p] for p in perm)
    Gc = skeleton.build_skeleton(canon.family)
    Gp = skeleton.build_skeleton(h3.family)
    assert {move(v): d for v, d in zip(Gc.vertices, Gc.degrees())} == dict(zip(Gp.vertices, Gp.degrees()))


def test_column_groups(h3):
    groups = master.column_groups(h3, skeleton.build_skeleton(h3.family))
    assert [len(g) for g in groups] == [10, 21, 10]
    assert [list(g) for g in groups] == [list(b) for b in tables.P3_TABLE_BLOCKS]
    canon = master.build_master(3)
    assert [len(g) for g in master.column_groups(canon, skeleton.build_skeleton(canon.family))] == [10, 21, 10]
