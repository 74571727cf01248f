from fractions import Fraction

import numpy as np
import pytest

from minksum import family
from minksum.errors import CapabilityError, DomainError, PreconditionError
from minksum.family import OrderedPartition, SimplexFamily


def test_sets_are_canonicalized():
    F = SimplexFamily(4, ((3, 1, 2), (4, 2, 2)))
    assert F.sets == ((1, 2, 3), (2, 4))
    assert (F.k, F.r) == (2, 4)
    assert F.support() == (1, 2, 3, 4)


@pytest.mark.parametrize("r, sets", [(3, ((0, 1),)), (2, ((1, 3),)), (2, ((),)), (2, ()), (0, ((1,),))])
def test_invalid_families_rejected(r, sets):
    with pytest.raises(DomainError):
        SimplexFamily(r, sets)


def test_json_round_trip(worked):
    assert SimplexFamily.from_json(worked.to_json()) == worked
    assert SimplexFamily.from_json('{"r": 4, "sets": [[1,2,3],[1,2,4]]}') == worked


@pytest.mark.parametrize("text", ['{"r": 3}', '{"r": "3", "sets": [[1]]}', '{"r": 3, "sets": [[2,1]]}',
                                  '{"r": 3, "sets": [[true]]}', '[1, 2]', '{"r": 3, "sets": [[0]]}'])
def test_malformed_json(text):
    with pytest.raises(DomainError):
        SimplexFamily.from_json(text)


def test_neighborhood(h3):
    H = h3.family
    assert family.neighborhood(H, 1) == {1, 2, 3}
    assert family.neighborhood(H, 5) == {1}
    assert family.neighborhood(SimplexFamily.of([[1]]), 1) == {1}
    assert [set(s) for s in family.signatures(H)] == [set(N) for N in h3.labels]


def test_components():
    assert family.components(SimplexFamily.of([[1, 2], [2, 3]])).count == 1
    two = family.components(SimplexFamily.of([[1, 2], [3, 4]]))
    assert two.count == 2 and sorted(two.parts) == [(1, 2), (3, 4)]
    one = family.components(SimplexFamily.of([[1, 2, 3], [1, 2, 4]]))
    assert one.count == 1 and one.support_size == 4


def test_dimension(worked, h3):
    assert family.dimension(worked) == 3
    assert family.dimension(h3.family) == 6
    assert family.dimension(SimplexFamily.of([[1]])) == 0
    assert family.dimension(SimplexFamily.of([[1, 2], [3, 4]])) == 2


def test_reduce(worked):
    red = family.reduce(worked, [1, 2])
    assert red.family == SimplexFamily(4, ((2, 3), (2, 4))) and red.m == 2
    assert red.foot == SimplexFamily(4, ((3,), (4,)))
    assert family.reduce(worked, [3]).family == worked
    assert family.reduce(SimplexFamily.of([[1, 2], [2]]), [2]).foot is None
    with pytest.raises(PreconditionError):
        family.reduce(worked, [1, 3])


def test_signature_classes(worked, h3):
    assert family.signature_classes(worked) == [(1, 2), (3,), (4,)]
    assert family.signature_classes(h3.family) == [(i,) for i in range(1, 8)]
    assert family.signature_classes(SimplexFamily.of([[1, 2], [1, 2]])) == [(1, 2)]


def test_face_family(rhombus, worked):
    assert family.face_family(rhombus, [[1, 2, 3]]) == rhombus
    assert family.face_family(rhombus, [[2], [1, 3]]) == SimplexFamily(3, ((1,), (3,)))
    assert family.face_family(worked, [[1, 2], [3, 4]]) == SimplexFamily(4, ((3,), (4,)))
    with pytest.raises(DomainError):
        family.face_family(rhombus, [[1], [2]])
    with pytest.raises(DomainError):
        OrderedPartition((frozenset({1}), frozenset({1, 2})))


def test_contains_point(rhombus):
    assert family.contains_point(rhombus, (1, 1, 0))
    assert not family.contains_point(rhombus, (2, 0, 0))
    assert family.contains_point(rhombus, (Fraction(1, 2), 1, Fraction(1, 2)))
    assert not family.contains_point(rhombus, (1, 1, 1))
    assert not family.contains_point(rhombus, (-1, 2, 1))
    pts = np.array([[1, 1, 0], [2, 0, 0], [0, 1, 1]])
    assert family.contains_points(rhombus, pts).tolist() == [True, False, True]


def test_rank_table(worked):
    rank = family.rank_table(worked)
    assert rank[0] == 0 and rank[(1 << 4) - 1] == 2
    assert rank[0b0100] == 1  # {3} meets only the first set
    with pytest.raises(CapabilityError):
        family.rank_table(SimplexFamily.of([[21]]))
