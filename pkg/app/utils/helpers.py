import hashlib
from typing import Iterable

from app.models.curves import FCurve, IntersectionVector


def format_weights(weights: Iterable[int]) -> str:
    return ",".join(str(a) for a in weights)


def format_blocks(curve: FCurve) -> str:
    """``1|2|3|456`` style; points are comma separated once n reaches 10."""
    sep = "," if curve.n >= 10 else ""
    return "|".join(sep.join(str(i) for i in block) for block in curve.blocks)


def class_hash(vector: IntersectionVector) -> str:
    payload = f"{vector.n}:" + ",".join(str(d) for d in vector.degrees)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]
