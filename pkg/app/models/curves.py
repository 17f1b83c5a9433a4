from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from app.core.errors import ArityMismatch, MalformedInput


@dataclass(frozen=True)
class FCurve:
    """A partition of the marked points {1..n} into four nonempty blocks.

    Blocks are stored sorted, and ordered by their smallest element.
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(i) for i in block)) for block in self.blocks)
        if len(blocks) != 4 or any(not block for block in blocks):
            raise MalformedInput(f"an F-curve needs four nonempty blocks, got {blocks}")
        points = [i for block in blocks for i in block]
        if len(set(points)) != len(points):
            raise MalformedInput(f"F-curve blocks overlap: {blocks}")
        if sorted(points) != list(range(1, len(points) + 1)):
            raise MalformedInput(f"F-curve blocks do not cover 1..{len(points)}: {blocks}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=lambda block: block[0])))

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def block_sets(self):
        return [frozenset(block) for block in self.blocks]


@dataclass(frozen=True)
class IntersectionVector:
    """Degrees of one divisor on every F-curve of M_0,n, in canonical curve order."""

    n: int
    curves: Tuple[FCurve, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if len(self.curves) != len(self.degrees):
            raise MalformedInput("one degree per F-curve is required")

    def __iter__(self) -> Iterator[Tuple[FCurve, int]]:
        return iter(zip(self.curves, self.degrees))

    def __add__(self, other: "IntersectionVector") -> "IntersectionVector":
        if other.n != self.n:
            raise ArityMismatch(f"cannot add classes on M_0,{self.n} and M_0,{other.n}")
        return IntersectionVector(
            self.n, self.curves, tuple(x + y for x, y in zip(self.degrees, other.degrees))
        )

    def scale(self, factor: int) -> "IntersectionVector":
        return IntersectionVector(self.n, self.curves, tuple(factor * x for x in self.degrees))

    @property
    def is_zero(self) -> bool:
        return not any(self.degrees)

    @property
    def is_nef(self) -> bool:
        return all(x >= 0 for x in self.degrees)


@dataclass(frozen=True)
class DivisorClass:
    basis_id: str
    basis: Tuple[Tuple[int, ...], ...]
    coords: Tuple[Fraction, ...]

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def as_integers(self):
        if not self.is_integral:
            raise ValueError(f"coordinates are not integral: {self.coords}")
        return [int(x) for x in self.coords]

    def as_strings(self):
        return [str(x) for x in self.coords]
