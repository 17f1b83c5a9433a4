"""Closed-form degrees of four-point conformal-blocks bundles on M_0,4."""
import functools
from typing import Tuple

from app.core.errors import ArityError, OddWeightSum, WeightExceedsLevel
from app.core.fusion import rank
from app.core.normalizer import Weights, as_entries, s_parameter
from app.models.bundle import Degree4, Family


def _half(numerator: int) -> int:
    if numerator % 2:
        raise ArithmeticError(f"odd numerator {numerator} in a four-point degree")
    return numerator // 2


def _four(weights: Weights, level: int) -> Tuple[int, int, int, int]:
    entries = tuple(sorted(as_entries(weights), reverse=True))
    if len(entries) != 4:
        raise ArityError(f"four weights required, got {len(entries)}")
    if any(a < 0 or a > level for a in entries):
        raise WeightExceedsLevel(f"weights {entries} are outside 0..{level}")
    if sum(entries) % 2:
        raise OddWeightSum(f"weights {entries} have odd sum")
    return entries


def deg4_sl2(weights: Weights, level: int) -> Degree4:
    entries = _four(weights, level)
    s = s_parameter(entries, level)
    if s < 0:
        return 0
    return rank(entries, level) * s


def deg4_sp(weights: Weights, level: int) -> Degree4:
    a, b, c, d = _four(weights, level)
    s = s_parameter((a, b, c, d), level)
    if a > level + s:
        return 0
    if a + d >= b + c:
        if s > 0:
            return _half(max(0, (level + 1 - a) * (level + 2 * s - a)))
        return _half((level + s + 1 - a) * (level + s - a))
    if s > 0:
        return _half(max(0, (1 + d - s) * (d + s)))
    return _half(d * (d + 1))


def deg4_sp_rank_form(weights: Weights, level: int) -> Degree4:
    """The sp degree written as rank times a linear factor, over 2."""
    a, b, c, d = _four(weights, level)
    s = s_parameter((a, b, c, d), level)
    r = rank((a, b, c, d), level)
    if r == 0 or a > level + s:
        return 0
    if a + d >= b + c:
        factor = level + 2 * s - a if s > 0 else level + s - a
    else:
        factor = d + s if s > 0 else d
    if factor < 0:
        return 0
    return _half(r * factor)


@functools.cache
def deg4_sorted(family: Family, key: Tuple[int, ...], level: int) -> Degree4:
    """deg4 for an already descending, even-sum key; memoized for the F-curve loop."""
    if family is Family.SL2:
        return deg4_sl2(key, level)
    return deg4_sp(key, level)


def deg4(family, weights: Weights, level: int) -> Degree4:
    family = family if isinstance(family, Family) else Family(family)
    entries = _four(weights, level)
    return deg4_sorted(family, entries, level)
