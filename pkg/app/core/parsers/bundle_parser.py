from pathlib import Path
from typing import List

from app.core.errors import MalformedInput
from app.models.curves import FCurve


def parse_weights(text: str) -> List[int]:
    """Comma separated nonnegative integers, e.g. ``4,4,4,4``."""
    items = [item.strip() for item in text.split(",")]
    if not text.strip() or any(not item for item in items):
        raise MalformedInput(f"cannot read weights from {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise MalformedInput(f"weights must be integers: {text!r}")


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.replace(",", " ").split()]
    except ValueError:
        raise MalformedInput(f"cannot read an index list from {text!r}")


def parse_fcurve(text: str) -> FCurve:
    """
    Parse ``1|2|3|456``. Blocks may spell points with commas
    (``1,10|2|3|4,5,6,7,8,9``), which is required once n reaches 10.
    """
    blocks = text.strip().split("|")
    if len(blocks) != 4 or any(not block.strip() for block in blocks):
        raise MalformedInput(f"an F-curve needs four '|' separated blocks: {text!r}")
    parsed = []
    for block in blocks:
        block = block.strip()
        if "," in block:
            parsed.append(tuple(parse_int_list(block)))
        elif block.isdigit():
            parsed.append(tuple(int(ch) for ch in block))
        else:
            raise MalformedInput(f"bad F-curve block {block!r}")
    return FCurve(tuple(parsed))


def parse_basis_file(path) -> List[List[int]]:
    """One boundary subset per line as an index list; blank lines and '#' comments skipped."""
    path = Path(path)
    if not path.is_file():
        raise MalformedInput(f"basis file not found: {path}")
    subsets = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        subsets.append(sorted(parse_int_list(line)))
    if not subsets:
        raise MalformedInput(f"basis file {path} lists no subsets")
    return subsets
