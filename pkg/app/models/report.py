from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from app.models.bundle import BundleSpec
from app.models.wire import BundleSpecWire


class Witness(BaseModel):
    """Something that reproduces an observation: an F-curve, a level, a subset."""

    kind: str
    value: str
    bundles: List[BundleSpecWire] = Field(default_factory=list)
    detail: str = ""

    @classmethod
    def of(cls, kind: str, value: Any, *bundles: BundleSpec, detail: str = "") -> "Witness":
        return cls(
            kind=kind,
            value=str(value),
            bundles=[BundleSpecWire.from_bundle(b) for b in bundles],
            detail=detail,
        )


class Failure(BaseModel):
    bundles: List[BundleSpecWire] = Field(default_factory=list)
    witness: Optional[Witness] = None
    expected: str
    got: str

    @classmethod
    def of(cls, bundles, expected: Any, got: Any, witness: Optional[Witness] = None) -> "Failure":
        return cls(
            bundles=[BundleSpecWire.from_bundle(b) for b in bundles],
            witness=witness,
            expected=str(expected),
            got=str(got),
        )


class VerificationReport(BaseModel):
    proposition_id: str
    instances_checked: int = 0
    skipped: int = 0
    failures: List[Failure] = Field(default_factory=list)
    witnesses: List[Witness] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    elapsed: Optional[float] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Fold a sub-report into this one, keeping the sub-report's id in the notes."""
        self.instances_checked += other.instances_checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        self.witnesses.extend(other.witnesses)
        self.notes.extend(f"{other.proposition_id}: {note}" for note in other.notes)
        if other.details:
            self.details[other.proposition_id] = other.details
        return self

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data = self.model_dump(mode="json")
        if not timing:
            data.pop("elapsed", None)
        return data
