from typing import Iterable, Iterator, Sequence, Union

from app.core.errors import (
    ArityError,
    DegenerateSum,
    EmptyWeights,
    InvalidLevel,
    MalformedInput,
    NegativeWeight,
    OddSubset,
    OddWeightSum,
    WeightExceedsLevel,
)
from app.models.bundle import BundleSpec, Family, SParameter, WeightVector
from app.utils.logger import logger

Weights = Union[WeightVector, Sequence[int]]


def make_bundle(family, level: int, raw_weights: Iterable[int], strict_order: bool = False) -> BundleSpec:
    """
    Build a validated BundleSpec from raw user input.
    The weights are canonicalized (sorted descending); the input order is kept
    as the marking of the points.
    """
    try:
        family = family if isinstance(family, Family) else Family(str(family).lower())
    except ValueError:
        raise MalformedInput(f"unknown family {family!r}; expected sl2 or spc")
    raw = [int(a) for a in raw_weights]
    if not raw:
        raise EmptyWeights("at least one weight is required")
    if level < 1:
        raise InvalidLevel(f"level must be positive, got {level}")
    if any(a < 0 for a in raw):
        raise NegativeWeight(f"negative weight in {raw}")
    if sum(raw) % 2:
        raise OddWeightSum(f"weights {raw} have odd sum {sum(raw)}")
    if max(raw) > level:
        raise WeightExceedsLevel(f"weight {max(raw)} exceeds level {level}")
    if strict_order and raw != sorted(raw, reverse=True):
        raise MalformedInput(f"weights {raw} are not sorted descending")
    return BundleSpec(family, level, WeightVector(tuple(raw)), tuple(raw))


def as_entries(weights: Weights):
    if isinstance(weights, WeightVector):
        return weights.entries
    if isinstance(weights, BundleSpec):
        return weights.weights.entries
    return tuple(int(a) for a in weights)


def s_parameter(weights: Weights, level: int) -> SParameter:
    """The integer s with a+b+c+d = 2(level+s)."""
    entries = as_entries(weights)
    if len(entries) != 4:
        raise ArityError(f"the s-parameter needs exactly 4 weights, got {len(entries)}")
    if sum(entries) % 2:
        raise OddWeightSum(f"weights {entries} have odd sum")
    return sum(entries) // 2 - level


def stabilizing_lie_rank(weights: Weights) -> int:
    entries = as_entries(weights)
    total = sum(entries)
    if total % 2:
        raise OddWeightSum(f"weights {entries} have odd sum")
    if total < 2:
        raise DegenerateSum(f"weights {entries} sum to {total}; the stabilizing rank needs at least 2")
    return total // 2 - 1


def plussed(weights: Weights, level: int, positions: Iterable[int]) -> WeightVector:
    """
    Replace the weight at every 1-based position in ``positions`` by
    ``level - weight``. Positions index the order the weights were given in.
    """
    entries = list(as_entries(weights))
    subset = set(positions)
    if len(subset) % 2:
        raise OddSubset(f"plussing needs an even number of points, got {sorted(subset)}")
    if any(a > level for a in entries):
        raise WeightExceedsLevel(f"weights {entries} exceed level {level}")
    for i in subset:
        if not 1 <= i <= len(entries):
            raise MalformedInput(f"position {i} outside 1..{len(entries)}")
        entries[i - 1] = level - entries[i - 1]
    return WeightVector(tuple(entries))


def _descending(n: int, cap: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(cap + 1):
        for rest in _descending(n - 1, first):
            yield (first,) + rest


def enumerate_weight_vectors(n: int, max_entry: int) -> Iterator[WeightVector]:
    """Every descending n-tuple over [0, max_entry] with even sum, in lexicographic order."""
    if n < 1 or max_entry < 0:
        raise MalformedInput(f"cannot enumerate weights for n={n}, max_entry={max_entry}")
    logger.debug(f"Enumerating weight vectors n={n} max_entry={max_entry}")
    for entries in _descending(n, max_entry):
        if sum(entries) % 2 == 0:
            yield WeightVector(entries)
