from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Tuple

from app.core.errors import (
    InvalidLevel,
    MalformedInput,
    NegativeWeight,
    OddWeightSum,
    WeightExceedsLevel,
)

# Plain integer aliases for the quantities the core hands around.
Rank = int
Degree4 = int
SParameter = int


class Family(enum.Enum):
    SL2 = "sl2"  # sl2 at level l
    SPC = "spc"  # sp_2l at level 1


class RankOneClass(enum.Enum):
    ZERO = "zero"
    ONE = "one"
    MORE_THAN_ONE = "more_than_one"


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative integer weights with even sum, stored sorted descending.

    Entry ``a`` stands for ``a*omega_1`` in the sl2 picture and for the
    fundamental weight ``omega_a`` in the sp picture. Zero entries are kept.
    """

    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if any(a < 0 for a in entries):
            raise NegativeWeight(f"negative weight in {entries}")
        if sum(entries) % 2:
            raise OddWeightSum(f"weights {entries} have odd sum {sum(entries)}")
        object.__setattr__(self, "entries", tuple(sorted(entries, reverse=True)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def max_entry(self) -> int:
        return self.entries[0] if self.entries else 0

    def scaled(self, factor: int) -> "WeightVector":
        return WeightVector(tuple(factor * a for a in self.entries))


@dataclass(frozen=True)
class BundleSpec:
    """Identity of one conformal-blocks bundle.

    ``weights`` is the canonical sorted form used for ranks and four-point
    degrees; ``marking`` keeps the caller's order of the marked points, which
    is what F-curve intersections are evaluated against.
    """

    family: Family
    level: int
    weights: WeightVector
    marking: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.weights, WeightVector):
            object.__setattr__(self, "weights", WeightVector(tuple(self.weights)))
        if self.level < 1:
            raise InvalidLevel(f"level must be positive, got {self.level}")
        if self.weights.max_entry > self.level:
            raise WeightExceedsLevel(
                f"weight {self.weights.max_entry} exceeds level {self.level}"
            )
        marking = tuple(int(a) for a in self.marking) or self.weights.entries
        if tuple(sorted(marking, reverse=True)) != self.weights.entries:
            raise MalformedInput(f"marking {marking} does not match weights {self.weights.entries}")
        object.__setattr__(self, "marking", marking)

    @property
    def n(self) -> int:
        return self.weights.n

    def with_family(self, family: Family) -> "BundleSpec":
        return BundleSpec(family, self.level, self.weights, self.marking)

    def scaled(self, factor: int) -> "BundleSpec":
        return BundleSpec(
            self.family,
            factor * self.level,
            self.weights.scaled(factor),
            tuple(factor * a for a in self.marking),
        )

    def marked(self, positions: Sequence[int]) -> Tuple[int, ...]:
        """Weights at the given 1-based marked points."""
        return tuple(self.marking[i - 1] for i in positions)

    def __str__(self) -> str:
        weights = ",".join(str(a) for a in self.marking)
        return f"{self.family.value}@{self.level}({weights})"
