import pytest

from app.core.errors import (
    ArityMismatch,
    BasisUnavailable,
    InvalidBoundaryIndex,
    MalformedInput,
    PartitionMismatch,
    RankNotOne,
    SingularBasis,
    TooFewPoints,
)
from app.core.fusion import rank
from app.core.intersection import (
    boundary_pairing,
    divisor_class,
    divisors_equal,
    enumerate_fcurves,
    induced_intersection_vector,
    intersect,
    intersection_vector,
    is_trivial,
    redundant_summands,
    verify_additivity,
    verify_scaling,
    verify_sum_decomposition,
)
from app.core.normalizer import make_bundle
from app.core.parsers.bundle_parser import parse_basis_file
from app.models.curves import FCurve
from tests.conftest import N6_SL2, N6_SPC, STABLE_ROW_5, STABLE_ROW_7


def test_fcurve_counts():
    assert len(enumerate_fcurves(4)) == 1
    assert len(enumerate_fcurves(5)) == 10
    assert len(enumerate_fcurves(6)) == 65
    assert len(enumerate_fcurves(7)) == 350
    with pytest.raises(TooFewPoints):
        enumerate_fcurves(3)


def test_fcurves_are_canonical_and_distinct():
    curves = enumerate_fcurves(6)
    assert len(set(curves)) == len(curves)
    for curve in curves:
        firsts = [block[0] for block in curve.blocks]
        assert firsts == sorted(firsts)
        assert FCurve(tuple(reversed(curve.blocks))) == curve


def test_fcurve_validation():
    with pytest.raises(MalformedInput):
        FCurve(((1,), (2,), (3, 4)))
    with pytest.raises(MalformedInput):
        FCurve(((1,), (2,), (3,), (3, 4)))
    with pytest.raises(MalformedInput):
        FCurve(((1,), (2,), (3,), (5,)))


def test_boundary_pairing():
    curve = FCurve(((1,), (2,), (3,), (4, 5, 6)))
    assert boundary_pairing(curve, {1, 2}) == 1
    assert boundary_pairing(curve, {4, 5, 6}) == -1
    assert boundary_pairing(curve, {1, 2, 3}) == -1
    assert boundary_pairing(curve, {1, 4}) == 0
    assert boundary_pairing(curve, {3, 4, 5, 6}) == 1
    with pytest.raises(InvalidBoundaryIndex):
        boundary_pairing(curve, {1})
    with pytest.raises(InvalidBoundaryIndex):
        boundary_pairing(curve, {1, 2, 3, 4, 5})


def test_four_point_intersection_is_the_degree(rank2_pair):
    sl2, spc = rank2_pair
    (curve,) = enumerate_fcurves(4)
    assert intersect(sl2, curve) == 6
    assert intersect(spc, curve) == 7


def test_partition_mismatch(rank2_pair):
    with pytest.raises(PartitionMismatch):
        intersect(rank2_pair[0], FCurve(((1,), (2,), (3,), (4, 5))))


def test_n6_coordinates(n6_pair):
    sl2, spc = n6_pair
    sl2_class = divisor_class(sl2)
    assert sl2_class.basis_id == "nonadjacent_m06"
    assert sl2_class.as_integers() == N6_SL2
    assert divisor_class(spc).as_integers() == N6_SPC
    assert divisor_class(make_bundle("sl2", 5, [4, 4, 4, 4, 3, 3])).as_strings() != [str(x) for x in N6_SL2]


def test_stable_table_rows():
    assert divisor_class(make_bundle("spc", 5, [5, 4, 3, 2, 1, 1])).as_integers() == STABLE_ROW_5
    assert divisor_class(make_bundle("spc", 7, [5, 4, 3, 2, 1, 1])).as_integers() == STABLE_ROW_7


def test_table_vectors_freeze_past_the_stabilizing_rank():
    vectors = [intersection_vector(make_bundle("spc", level, [5, 4, 3, 2, 1, 1])) for level in (5, 8, 9, 10)]
    assert vectors[0] != vectors[1]
    assert vectors[1] == vectors[2] == vectors[3]


def test_explicit_basis_matches_builtin(n6_pair, basis_file):
    spc = n6_pair[1]
    custom = divisor_class(spc, parse_basis_file(basis_file), "file")
    assert custom.basis_id == "file"
    assert custom.as_integers() == N6_SPC


def test_round_trip_through_pairing(n6_pair):
    for bundle in n6_pair:
        assert induced_intersection_vector(divisor_class(bundle), 6) == intersection_vector(bundle)


def test_basis_errors():
    five = make_bundle("spc", 2, [2, 1, 1, 1, 1])
    with pytest.raises(BasisUnavailable):
        divisor_class(five)
    with pytest.raises(SingularBasis):
        divisor_class(five, [[1, 2], [3, 4, 5]])


def test_family_inequality_on_every_curve(n6_pair):
    sl2, spc = n6_pair
    for (curve, x), (_, y) in zip(intersection_vector(sl2), intersection_vector(spc)):
        assert 0 <= x <= y


def test_relabeling_symmetry():
    weights = [4, 3, 4, 4, 3, 4]
    # point i moves to position perm[i - 1]
    perm = [3, 6, 1, 5, 2, 4]
    moved = [0] * 6
    for i, a in enumerate(weights, start=1):
        moved[perm[i - 1] - 1] = a
    original, relabeled = make_bundle("spc", 5, weights), make_bundle("spc", 5, moved)
    for curve in enumerate_fcurves(6):
        image = FCurve(tuple(tuple(perm[i - 1] for i in block) for block in curve.blocks))
        assert intersect(original, curve) == intersect(relabeled, image)


def test_divisors_equal(rank2_pair):
    sl2, spc = rank2_pair
    assert not divisors_equal(sl2, spc)
    assert divisors_equal(sl2, sl2)
    assert divisors_equal(make_bundle("sl2", 5, [5, 3, 3, 1]), make_bundle("spc", 5, [5, 3, 3, 1]))
    with pytest.raises(ArityMismatch):
        divisors_equal(sl2, make_bundle("sl2", 5, [4, 4, 4, 4, 2]))


def test_is_trivial():
    assert is_trivial(make_bundle("sl2", 5, [2, 2, 1, 1]))
    assert not is_trivial(make_bundle("spc", 5, [2, 2, 1, 1]))
    assert is_trivial(make_bundle("spc", 3, [0, 0, 0, 0, 0]))
    assert intersection_vector(make_bundle("sl2", 2, [0] * 6)).is_zero


def test_sum_decomposition_small():
    target = make_bundle("sl2", 2, [2, 2, 2, 2])
    part = make_bundle("sl2", 1, [1, 1, 1, 1])
    assert verify_sum_decomposition(target, [target])
    assert verify_sum_decomposition(target, [part, part])
    assert not verify_sum_decomposition(target, [part])
    with pytest.raises(ArityMismatch):
        verify_sum_decomposition(target, [make_bundle("sl2", 1, [1, 1])])


def test_redundant_summands(rank2_pair):
    spc = rank2_pair[1]
    assert redundant_summands(spc, [spc]) == []
    assert redundant_summands(spc, [spc, make_bundle("spc", 5, [0, 0, 0, 0])]) == [1]


def test_scaling():
    base = make_bundle("spc", 1, [1, 1, 1, 1])
    assert verify_scaling(base, 1)
    assert verify_scaling(base, 2)
    assert verify_scaling(base, 3)
    assert verify_scaling(make_bundle("spc", 2, [2, 2, 1, 1]), 2)
    with pytest.raises(RankNotOne):
        verify_scaling(make_bundle("spc", 2, [2, 1, 1, 1, 1]), 2)
    with pytest.raises(MalformedInput):
        verify_scaling(make_bundle("sl2", 1, [1, 1, 1, 1]), 2)


def test_additivity():
    base = make_bundle("spc", 1, [1, 1, 1, 1])
    assert verify_additivity(base, base)
    with pytest.raises(RankNotOne):
        verify_additivity(make_bundle("spc", 5, [4, 4, 4, 4]), base)
    pair = make_bundle("spc", 2, [1, 1, 2, 2]), make_bundle("spc", 2, [2, 2, 1, 1])
    assert rank(pair[0].weights, 2) == rank(pair[1].weights, 2) == 1
    with pytest.raises(RankNotOne):
        verify_additivity(*pair)
    assert verify_additivity(make_bundle("spc", 2, [2, 2, 1, 1]), make_bundle("spc", 2, [2, 1, 2, 1]))
