"""
Ranks of sl2 conformal-blocks bundles in genus zero.

The rank of the sp_2l level-one bundle with the same weights is the same
number, so one rank function serves both families. Ranks are computed by
factorization down to the three-point fusion rules and memoized on the
canonical multiset of nonzero weights.
"""
import functools
from typing import Iterable, List, Tuple

from app.core.errors import ArityError, EmptyWeights, MalformedInput, WeightExceedsLevel
from app.core.normalizer import Weights, as_entries, s_parameter, stabilizing_lie_rank
from app.models.bundle import Rank, RankOneClass
from app.utils.logger import logger


def _check_level(entries, level: int):
    for a in entries:
        if a < 0 or a > level:
            raise WeightExceedsLevel(f"weight {a} is outside 0..{level}")


def fusion_range(x: int, y: int, level: int) -> range:
    """Weights mu with rank3(x, y, mu) = 1, for x, y within the level."""
    return range(abs(x - y), min(x + y, 2 * level - x - y) + 1, 2)


def _key(entries: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(a for a in entries if a))


def _rank3(a: int, b: int, c: int, level: int) -> int:
    total = a + b + c
    if total % 2 or total > 2 * level:
        return 0
    return int(a <= b + c and b <= a + c and c <= a + b)


@functools.cache
def _rank(key: Tuple[int, ...], level: int) -> int:
    # key: nonzero weights sorted ascending
    total = sum(key)
    if total % 2:
        return 0
    n = len(key)
    if n == 0:
        return 1
    if n == 1:
        return 0
    if n == 2:
        return int(key[0] == key[1])
    if n == 3:
        return _rank3(*key, level)
    if 2 * key[-1] > total:
        return 0
    x, y, rest = key[0], key[1], key[2:]
    return sum(_rank(_key(rest + (mu,)), level) for mu in fusion_range(x, y, level))


def rank2(a: int, b: int, level: int) -> Rank:
    _check_level((a, b), level)
    return int(a == b)


def rank3(a: int, b: int, c: int, level: int) -> Rank:
    _check_level((a, b, c), level)
    return _rank3(a, b, c, level)


def rank(weights: Weights, level: int) -> Rank:
    entries = as_entries(weights)
    _check_level(entries, level)
    return _rank(_key(entries), level)


def factorize(weights: Weights, level: int, block: Iterable[int]) -> Rank:
    """
    Factorization sum over the attaching weight for the bipartition of the
    points into ``block`` (1-based positions) and its complement.
    """
    entries = as_entries(weights)
    _check_level(entries, level)
    block = set(block)
    if any(not 1 <= i <= len(entries) for i in block):
        raise MalformedInput(f"block {sorted(block)} is not a set of positions in 1..{len(entries)}")
    side_a = tuple(entries[i - 1] for i in sorted(block))
    side_b = tuple(a for i, a in enumerate(entries, start=1) if i not in block)
    return sum(
        _rank(_key(side_a + (mu,)), level) * _rank(_key(side_b + (mu,)), level)
        for mu in range(level + 1)
    )


def triangle_vanishes(weights: Weights) -> bool:
    entries = as_entries(weights)
    if not entries:
        raise EmptyWeights("no weights given")
    return 2 * max(entries) > sum(entries)


def classify_rank_one_4pt(weights: Weights, level: int) -> RankOneClass:
    entries = tuple(sorted(as_entries(weights), reverse=True))
    if len(entries) != 4:
        raise ArityError(f"four weights required, got {len(entries)}")
    _check_level(entries, level)
    a, b, c, d = entries
    s = s_parameter(entries, level)
    if d == 0:
        # a vacuum point: this is a three-point bundle
        return RankOneClass.ONE if _rank3(a, b, c, level) else RankOneClass.ZERO
    if s >= 0:
        if d >= s and (a == level or d == s):
            return RankOneClass.ONE
        if d > s and a != level:
            return RankOneClass.MORE_THAN_ONE
    else:
        if a == level + s:
            return RankOneClass.ONE
        if a < level + s:
            return RankOneClass.MORE_THAN_ONE
    return RankOneClass.ZERO


def rank_at_levels(weights: Weights, level_lo: int, level_hi: int) -> List[Rank]:
    entries = as_entries(weights)
    if level_lo > level_hi:
        raise MalformedInput(f"empty level range {level_lo}..{level_hi}")
    _check_level(entries, level_lo)
    return [rank(entries, level) for level in range(level_lo, level_hi + 1)]


def shifted_rank_4pt(weights: Weights, level: int) -> Tuple[Rank, bool]:
    """
    Four-point rank at ``level`` predicted from the rank at r+1 (r the
    stabilizing Lie rank): below r+1 each level step down costs one.
    Returns the prediction clamped at 0, and whether the clamp fired.
    """
    entries = as_entries(weights)
    if len(entries) != 4:
        raise ArityError(f"four weights required, got {len(entries)}")
    _check_level(entries, level)
    if triangle_vanishes(entries):
        return 0, False
    critical = stabilizing_lie_rank(entries) + 1
    raw = rank(entries, critical) - max(0, s_parameter(entries, level))
    if raw < 0:
        logger.debug(f"Four-point rank shift clamped for {entries} at level {level}: {raw} -> 0")
        return 0, True
    return raw, False
