from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field

from app.models.bundle import BundleSpec


class BundleSpecWire(BaseModel):
    """JSON encoding of a BundleSpec; weights keep the marked-point order."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    family: Literal["sl2", "spc"]
    level: int = Field(ge=1)
    weights: List[int]

    def to_bundle(self, strict_order: bool = False) -> BundleSpec:
        from app.core.normalizer import make_bundle

        return make_bundle(self.family, self.level, self.weights, strict_order=strict_order)

    @classmethod
    def from_bundle(cls, bundle: BundleSpec) -> "BundleSpecWire":
        return cls(family=bundle.family.value, level=bundle.level, weights=list(bundle.marking))
