"""
F-curve intersection numbers of conformal-blocks divisors on M_0,n and
their coordinates in a boundary basis of the Picard group.

A divisor class is carried as its full vector of F-curve degrees; basis
coordinates are recovered from it by an exact linear solve.
"""
import functools
import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

from app.core.degrees import deg4_sorted
from app.core.errors import (
    ArityMismatch,
    BasisUnavailable,
    CBlocksError,
    InvalidBoundaryIndex,
    MalformedInput,
    PartitionMismatch,
    RankNotOne,
    TooFewPoints,
)
from app.core.fusion import rank
from app.core.linalg import solve_exact
from app.core.normalizer import make_bundle
from app.models.bundle import BundleSpec, Family
from app.models.curves import DivisorClass, FCurve, IntersectionVector
from app.utils.logger import logger
from config.config import BOUNDARY_BASES

Basis = Tuple[Tuple[int, ...], ...]


def _four_block_strings(n: int, prefix: List[int], used: int) -> Iterator[List[int]]:
    # restricted growth strings: point i goes to an existing block or opens the next one
    if len(prefix) == n:
        if used == 4:
            yield prefix
        return
    if used + (n - len(prefix)) < 4:
        return
    for b in range(min(used + 1, 4)):
        yield from _four_block_strings(n, prefix + [b], max(used, b + 1))


@functools.cache
def _fcurves(n: int) -> Tuple[FCurve, ...]:
    curves = []
    for labels in _four_block_strings(n, [], 0):
        blocks = [[], [], [], []]
        for point, b in enumerate(labels, start=1):
            blocks[b].append(point)
        curves.append(FCurve(tuple(tuple(block) for block in blocks)))
    return tuple(curves)


def enumerate_fcurves(n: int) -> List[FCurve]:
    """Every F-curve of M_0,n once, blocks ordered by their smallest point."""
    if n < 4:
        raise TooFewPoints(f"F-curves need at least 4 points, got n={n}")
    return list(_fcurves(n))


def intersect(bundle: BundleSpec, curve: FCurve) -> int:
    """
    Degree of the bundle on an F-curve: the sum over attaching weights
    (m1..m4) of deg4(m1..m4) times the ranks of the four legs.
    """
    if curve.n != bundle.n:
        raise PartitionMismatch(f"F-curve on {curve.n} points used with a bundle on {bundle.n} points")
    level = bundle.level
    legs = []
    for block in curve.blocks:
        weights = bundle.marked(block)
        options = []
        for mu in range(level + 1):
            r = rank(weights + (mu,), level)
            if r:
                options.append((mu, r))
        if not options:
            return 0
        legs.append(options)
    total = 0
    for combo in itertools.product(*legs):
        mus = tuple(sorted((mu for mu, _ in combo), reverse=True))
        if sum(mus) % 2:
            continue
        degree = deg4_sorted(bundle.family, mus, level)
        if degree:
            total += degree * combo[0][1] * combo[1][1] * combo[2][1] * combo[3][1]
    return total


def intersection_vector(bundle: BundleSpec) -> IntersectionVector:
    curves = enumerate_fcurves(bundle.n)
    return IntersectionVector(bundle.n, tuple(curves), tuple(intersect(bundle, f) for f in curves))


def boundary_pairing(curve: FCurve, subset: Sequence[int]) -> int:
    """Intersection number of an F-curve with the boundary divisor delta_I."""
    n = curve.n
    points = frozenset(subset)
    if not 2 <= len(points) <= n - 2 or any(not 1 <= i <= n for i in points):
        raise InvalidBoundaryIndex(f"{sorted(points)} does not index a boundary divisor of M_0,{n}")
    inside = [block for block in curve.block_sets() if block <= points]
    if sum(len(block) for block in inside) != len(points):
        return 0
    return 1 if len(inside) == 2 else -1


def _normalize_basis(basis: Sequence[Sequence[int]]) -> Basis:
    return tuple(tuple(sorted(int(i) for i in subset)) for subset in basis)


def default_basis(n: int) -> Tuple[str, Basis]:
    for basis_id, entry in BOUNDARY_BASES.items():
        if entry["n"] == n:
            return basis_id, _normalize_basis(entry["subsets"])
    raise BasisUnavailable(f"no built-in boundary basis for n={n}; pass one explicitly")


@functools.cache
def pairing_matrix(n: int, basis: Basis) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(boundary_pairing(f, subset) for subset in basis) for f in _fcurves(n))


def divisor_class(
    bundle: BundleSpec,
    basis: Optional[Sequence[Sequence[int]]] = None,
    basis_id: str = "custom",
) -> DivisorClass:
    if bundle.n < 4:
        raise TooFewPoints(f"M_0,{bundle.n} has no divisors to solve for")
    if basis is None:
        basis_id, subsets = default_basis(bundle.n)
    else:
        subsets = _normalize_basis(basis)
    vector = intersection_vector(bundle)
    try:
        coords = solve_exact(pairing_matrix(bundle.n, subsets), vector.degrees)
    except CBlocksError as e:
        logger.error(f"Error solving for the class of {bundle} in basis {basis_id}: {str(e)}")
        raise
    return DivisorClass(basis_id, subsets, tuple(coords))


def induced_intersection_vector(divisor: DivisorClass, n: int) -> IntersectionVector:
    """F-curve degrees of a class given by basis coordinates."""
    matrix = pairing_matrix(n, divisor.basis)
    degrees = []
    for row in matrix:
        value = sum(p * x for p, x in zip(row, divisor.coords))
        if value.denominator != 1:
            raise MalformedInput(f"non-integral F-curve degree {value}")
        degrees.append(int(value))
    return IntersectionVector(n, _fcurves(n), tuple(degrees))


def _same_n(*bundles: BundleSpec) -> int:
    sizes = {b.n for b in bundles}
    if len(sizes) != 1:
        raise ArityMismatch(f"bundles live on different M_0,n: n in {sorted(sizes)}")
    return sizes.pop()


def divisors_equal(first: BundleSpec, second: BundleSpec) -> bool:
    _same_n(first, second)
    if first == second:
        return True
    return intersection_vector(first) == intersection_vector(second)


def is_trivial(bundle: BundleSpec) -> bool:
    if bundle.n < 4:
        # M_0,n is a point
        return True
    return intersection_vector(bundle).is_zero


def verify_sum_decomposition(target: BundleSpec, parts: Sequence[BundleSpec]) -> bool:
    _same_n(target, *parts)
    total = None
    for part in parts:
        vector = intersection_vector(part)
        total = vector if total is None else total + vector
    expected = intersection_vector(target)
    if total is None:
        return expected.is_zero
    return expected == total


def redundant_summands(target: BundleSpec, parts: Sequence[BundleSpec]) -> List[int]:
    """Indices of summands that can be dropped with the sum still matching the target."""
    _same_n(target, *parts)
    expected = intersection_vector(target)
    vectors = [intersection_vector(part) for part in parts]
    redundant = []
    for skip in range(len(parts)):
        rest = [v for i, v in enumerate(vectors) if i != skip]
        if not rest:
            if expected.is_zero:
                redundant.append(skip)
            continue
        total = rest[0]
        for v in rest[1:]:
            total = total + v
        if total == expected:
            redundant.append(skip)
    return redundant


def _require_rank_one(bundle: BundleSpec):
    r = rank(bundle.weights, bundle.level)
    if r != 1:
        raise RankNotOne(f"{bundle} has rank {r}")


def verify_scaling(base: BundleSpec, factor: int) -> bool:
    """Check c1(V(sp_2Nl, N*lambda)) = N * c1(V(sp_2l, lambda)) for a rank-one base."""
    if base.family is not Family.SPC:
        raise MalformedInput("scaling is stated for sp level-one bundles")
    if factor < 1:
        raise MalformedInput(f"scaling factor must be positive, got {factor}")
    _require_rank_one(base)
    if factor == 1:
        return True
    return intersection_vector(base.scaled(factor)) == intersection_vector(base).scale(factor)


def verify_additivity(first: BundleSpec, second: BundleSpec) -> bool:
    """
    For rank-one bundles of one family, check that the bundle at the summed
    level with pointwise summed weights has the sum of the two classes.
    The combined bundle must have rank one as well.
    """
    _same_n(first, second)
    if first.family is not second.family:
        raise MalformedInput("additivity compares bundles of one family")
    _require_rank_one(first)
    _require_rank_one(second)
    combined = make_bundle(
        first.family,
        first.level + second.level,
        [x + y for x, y in zip(first.marking, second.marking)],
    )
    _require_rank_one(combined)
    return intersection_vector(combined) == intersection_vector(first) + intersection_vector(second)
