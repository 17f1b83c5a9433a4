import json
import sys
import time
from pathlib import Path
from typing import List, Optional

import pandas as pd

from app.core import validator
from app.core.degrees import deg4
from app.core.errors import MalformedInput
from app.core.fusion import rank
from app.core.intersection import divisor_class, intersect, intersection_vector
from app.core.normalizer import enumerate_weight_vectors
from app.core.parsers.bundle_parser import parse_basis_file, parse_fcurve, parse_weights
from app.models.bundle import BundleSpec, Family
from app.models.report import VerificationReport
from app.models.wire import BundleSpecWire
from app.utils.helpers import class_hash, format_blocks, format_weights
from app.utils.logger import logger


def _emit(text: str, out: Optional[str] = None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def bundle_from_args(args) -> BundleSpec:
    wire = BundleSpecWire(family=args.family, level=args.level, weights=parse_weights(args.weights))
    return wire.to_bundle(strict_order=args.strict_order)


def cmd_rank(args) -> int:
    bundle = bundle_from_args(args)
    _emit(f"{rank(bundle.weights, bundle.level)}\n")
    return 0


def cmd_degree4(args) -> int:
    bundle = bundle_from_args(args)
    _emit(f"{deg4(bundle.family, bundle.weights, bundle.level)}\n")
    return 0


def cmd_intersect(args) -> int:
    bundle = bundle_from_args(args)
    _emit(f"{intersect(bundle, parse_fcurve(args.curve))}\n")
    return 0


def cmd_divisor(args) -> int:
    """
    Print the class of a bundle: basis coordinates (``coords``) or the
    F-curve degree table (``fvec``).
    """
    bundle = bundle_from_args(args)
    if args.format == "fvec":
        vector = intersection_vector(bundle)
        frame = pd.DataFrame(
            {"blocks": [format_blocks(f) for f in vector.curves], "degree": list(vector.degrees)}
        )
        _emit(_to_csv(frame), args.out)
        return 0
    if args.basis:
        divisor = divisor_class(bundle, parse_basis_file(args.basis), Path(args.basis).stem)
    else:
        divisor = divisor_class(bundle)
    _emit(",".join(divisor.as_strings()) + "\n", args.out)
    return 0


def _run_proposition(prop: str, args) -> VerificationReport:
    if prop == "main":
        return validator.check_prop_main(args.n, args.lmax)
    if prop == "stab":
        if args.weights:
            return validator.check_stabilization(parse_weights(args.weights), args.extra)
        return validator.check_stabilization_scan(args.n, args.max_sum, args.extra, args.limit)
    if prop == "mono":
        return validator.check_rank_monotonicity(parse_weights(args.weights or "5,4,3,2,1,1"), args.rhi)
    if prop == "plussing":
        return validator.check_plussing(args.n, args.level)
    if prop == "examples":
        return validator.reproduce_reference_examples()
    if prop == "degrees":
        return validator.check_degree_formulas(args.lmax)
    if prop == "factorization":
        return validator.check_factorization(args.samples, args.seed)
    if prop == "scaling":
        return validator.check_scaling()
    if prop == "additivity":
        return validator.check_additivity()
    if prop == "nonvanishing":
        return validator.check_nonvanishing(args.n, args.lmax)
    if prop == "classify":
        return validator.check_rank_one_classification(args.lmax)
    if prop == "decomposition":
        return validator.check_decomposition()
    raise MalformedInput(f"unknown proposition {prop!r}")


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.prop == "all":
        report = VerificationReport(proposition_id="all")
        for prop in PROPOSITIONS:
            if prop != "all":
                report.merge(_run_proposition(prop, args))
    else:
        report = _run_proposition(args.prop, args)
    report.elapsed = round(time.perf_counter() - started, 3)
    _emit(json.dumps(report.to_dict(timing=args.timing), sort_keys=True, indent=2) + "\n", args.out)
    if not report.passed:
        logger.warning(f"verify {args.prop}: {len(report.failures)} failures")
        return 1
    return 0


def scan_rows(n: int, level_max: int) -> List[dict]:
    if n < 4 or level_max < 0:
        raise MalformedInput(f"scan needs n >= 4 and lmax >= 0, got n={n}, lmax={level_max}")
    rows = []
    for weights in enumerate_weight_vectors(n, level_max):
        for family in Family:
            for level in range(max(1, weights.max_entry), level_max + 1):
                bundle = BundleSpec(family, level, weights)
                vector = intersection_vector(bundle)
                rows.append(
                    {
                        "weights": format_weights(weights),
                        "family": family.value,
                        "level": level,
                        "rank": rank(weights, level),
                        "trivial": vector.is_zero,
                        "class_hash": class_hash(vector),
                    }
                )
    return rows


SCAN_COLUMNS = ["weights", "family", "level", "rank", "trivial", "class_hash"]


def cmd_scan(args) -> int:
    rows = scan_rows(args.n, args.lmax)
    logger.info(f"scan: {len(rows)} rows for n={args.n}, lmax={args.lmax}")
    _emit(_to_csv(pd.DataFrame(rows, columns=SCAN_COLUMNS)), args.out)
    return 0


PROPOSITIONS = [
    "main",
    "stab",
    "mono",
    "plussing",
    "examples",
    "degrees",
    "factorization",
    "scaling",
    "additivity",
    "nonvanishing",
    "classify",
    "decomposition",
    "all",
]
