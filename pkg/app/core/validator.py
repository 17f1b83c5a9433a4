"""
Finite-range verification of the structural results about sl2 and sp
conformal-blocks divisors.

Every check returns a VerificationReport. One bad instance never stops a
scan: exceptions raised while checking an instance are turned into failures.
"""
import itertools
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence

from tqdm import tqdm

from app.core.degrees import deg4_sl2, deg4_sp, deg4_sp_rank_form
from app.core.errors import CBlocksError, DegenerateSum, RankNotOne, StabRankBelowMaxWeight
from app.core.fusion import (
    classify_rank_one_4pt,
    factorize,
    rank,
    rank_at_levels,
    shifted_rank_4pt,
    triangle_vanishes,
)
from app.core.intersection import (
    divisor_class,
    intersection_vector,
    is_trivial,
    redundant_summands,
    verify_additivity,
    verify_scaling,
    verify_sum_decomposition,
)
from app.core.normalizer import (
    enumerate_weight_vectors,
    make_bundle,
    plussed,
    s_parameter,
    stabilizing_lie_rank,
)
from app.models.bundle import BundleSpec, Family, RankOneClass, WeightVector
from app.models.report import Failure, VerificationReport, Witness
from app.models.wire import BundleSpecWire
from app.utils.helpers import format_blocks
from app.utils.logger import logger
from config.config import BOUNDARY_BASES, COMPUTE_CONFIG, REFERENCE_EXAMPLES, SCAN_CONFIG


def _fan_out(check: Callable, items: Sequence, desc: str) -> List[VerificationReport]:
    """Run ``check`` on every item, concurrently if configured; results keep input order."""
    threads = COMPUTE_CONFIG["threads"]
    progress = tqdm(total=len(items), desc=desc, disable=not SCAN_CONFIG["progress"], file=sys.stderr)
    results = []
    try:
        if threads > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for result in pool.map(check, items):
                    results.append(result)
                    progress.update()
        else:
            for item in items:
                results.append(check(item))
                progress.update()
    finally:
        progress.close()
    return results


def _guarded(proposition_id: str, check: Callable, bundles: Callable[[object], Iterable[BundleSpec]] = None):
    def run(item) -> VerificationReport:
        try:
            return check(item)
        except (CBlocksError, ArithmeticError) as e:
            logger.warning(f"{proposition_id}: instance {item} raised {type(e).__name__}: {str(e)}")
            report = VerificationReport(proposition_id=proposition_id, instances_checked=1)
            involved = list(bundles(item)) if bundles else []
            report.failures.append(Failure.of(involved, "no error", f"{type(e).__name__}: {e}"))
            return report

    return run


def _collect(proposition_id: str, parts: Iterable[VerificationReport]) -> VerificationReport:
    report = VerificationReport(proposition_id=proposition_id)
    for part in parts:
        report.instances_checked += part.instances_checked
        report.skipped += part.skipped
        report.failures.extend(part.failures)
        report.witnesses.extend(part.witnesses)
        report.notes.extend(part.notes)
    if report.failures:
        logger.warning(f"{proposition_id}: {len(report.failures)} failures in {report.instances_checked} instances")
    else:
        logger.info(f"{proposition_id}: {report.instances_checked} instances passed")
    return report


def _first_difference(first, second):
    for (curve, x), (_, y) in zip(first, second):
        if x != y:
            return curve, x, y
    return None


def _pair(weights: WeightVector, level: int):
    sl2 = BundleSpec(Family.SL2, level, weights)
    return sl2, sl2.with_family(Family.SPC)


def check_prop_main(n: int, level_max: int) -> VerificationReport:
    """
    The sl2 level-l and sp_2l level-one divisors with the same weights agree
    exactly when the rank is at most one; otherwise some F-curve sees a
    strictly larger sp degree.
    """
    if n < 4:
        return VerificationReport(proposition_id="main", notes=[f"n={n} has no F-curves; nothing to check"])
    items = [
        (weights, level)
        for weights in enumerate_weight_vectors(n, level_max)
        for level in range(max(1, weights.max_entry), level_max + 1)
    ]
    logger.info(f"main: scanning {len(items)} instances, n={n}, level <= {level_max}")

    def check(item) -> VerificationReport:
        weights, level = item
        sl2, spc = _pair(weights, level)
        report = VerificationReport(proposition_id="main", instances_checked=1)
        r = rank(weights, level)
        v_sl2, v_spc = intersection_vector(sl2), intersection_vector(spc)
        for bundle, vector in ((sl2, v_sl2), (spc, v_spc)):
            if not vector.is_nef:
                curve, x = next((curve, x) for curve, x in vector if x < 0)
                report.failures.append(
                    Failure.of([bundle], ">= 0", x, Witness.of("fcurve", format_blocks(curve), detail="nef"))
                )
        if report.failures:
            return report
        for curve, x, y in zip(v_sl2.curves, v_sl2.degrees, v_spc.degrees):
            if x > y:
                report.failures.append(
                    Failure.of([sl2, spc], "sl2 <= spc", f"{x} > {y}", Witness.of("fcurve", format_blocks(curve)))
                )
                return report
        if r <= 1:
            diff = _first_difference(v_sl2, v_spc)
            if diff:
                curve, x, y = diff
                report.failures.append(
                    Failure.of(
                        [sl2, spc],
                        f"equal classes at rank {r}",
                        f"sl2 {x} vs spc {y}",
                        Witness.of("fcurve", format_blocks(curve)),
                    )
                )
        else:
            diff = _first_difference(v_sl2, v_spc)
            if diff:
                curve, x, y = diff
                report.witnesses.append(
                    Witness.of("fcurve", format_blocks(curve), sl2, spc, detail=f"rank {r}: sl2 {x} < spc {y}")
                )
            else:
                report.failures.append(Failure.of([sl2, spc], f"strict F-curve at rank {r}", "classes equal"))
        return report

    return _collect("main", _fan_out(_guarded("main", check, lambda item: _pair(*item)), items, "main"))


def _stable_levels(weights: WeightVector, extra: int):
    critical = stabilizing_lie_rank(weights)
    if weights.max_entry > critical:
        raise StabRankBelowMaxWeight(
            f"stabilizing rank {critical} is below the largest weight {weights.max_entry}"
        )
    return critical, range(max(weights.max_entry, critical, 1), critical + extra + 1)


def check_stabilization(weights, extra: int) -> VerificationReport:
    """sp level-one classes are constant in the Lie rank from the stabilizing rank on."""
    weights = weights if isinstance(weights, WeightVector) else WeightVector(tuple(weights))
    report = VerificationReport(proposition_id="stab")
    try:
        critical, levels = _stable_levels(weights, extra)
    except (StabRankBelowMaxWeight, DegenerateSum) as e:
        report.skipped += 1
        report.notes.append(f"skipped {weights.entries}: {type(e).__name__}: {e}")
        logger.info(f"stab: skipped {weights.entries}: {str(e)}")
        return report
    if weights.n < 4:
        report.skipped += 1
        report.notes.append(f"skipped {weights.entries}: n < 4 has no F-curves")
        return report
    bundles = [BundleSpec(Family.SPC, level, weights) for level in levels]
    vectors = [intersection_vector(b) for b in bundles]
    report.instances_checked = len(bundles)
    report.details = {"levels": list(levels), "stabilizing_rank": critical}
    for bundle, vector in zip(bundles[1:], vectors[1:]):
        diff = _first_difference(vectors[0], vector)
        if diff:
            curve, x, y = diff
            report.failures.append(
                Failure.of([bundles[0], bundle], x, y, Witness.of("fcurve", format_blocks(curve)))
            )
    nontrivial = rank(weights, critical) > 0
    report.details["nontrivial"] = nontrivial
    for bundle, vector in zip(bundles, vectors):
        if vector.is_zero == nontrivial:
            report.failures.append(
                Failure.of(
                    [bundle],
                    "nontrivial" if nontrivial else "trivial",
                    "trivial" if vector.is_zero else "nontrivial",
                    Witness.of("level", bundle.level),
                )
            )
    return report


def stabilization_candidates(n_max: int, max_sum: int) -> List[WeightVector]:
    """Weight vectors with 4..n_max points, sum at most ``max_sum`` and largest weight at most r."""
    candidates = []
    for n in range(4, n_max + 1):
        for weights in enumerate_weight_vectors(n, max_sum // 2):
            if 2 <= weights.total <= max_sum and weights.max_entry <= weights.total // 2 - 1:
                candidates.append(weights)
    return candidates


def check_stabilization_scan(n_max: int, max_sum: int, extra: int, limit: Optional[int] = None) -> VerificationReport:
    candidates = stabilization_candidates(n_max, max_sum)
    if limit is not None:
        candidates = candidates[:limit]
    logger.info(f"stab: scanning {len(candidates)} weight vectors with sum <= {max_sum}")
    check = _guarded("stab", lambda weights: check_stabilization(weights, extra))
    return _collect("stab", _fan_out(check, candidates, "stab"))


def check_rank_monotonicity(weights, level_hi: int) -> VerificationReport:
    """
    Ranks grow strictly with the level up to r+1 (r the stabilizing rank)
    and are constant afterwards. Four-point inputs also check the rank shift
    below r+1, recording where its clamp at zero fires.
    """
    weights = weights if isinstance(weights, WeightVector) else WeightVector(tuple(weights))
    report = VerificationReport(proposition_id="mono")
    level_lo = max(1, weights.max_entry)
    try:
        critical = stabilizing_lie_rank(weights) + 1
    except DegenerateSum as e:
        report.skipped += 1
        report.notes.append(f"skipped {weights.entries}: {e}")
        return report
    if triangle_vanishes(weights) or level_lo > level_hi:
        report.skipped += 1
        report.notes.append(f"skipped {weights.entries}: rank vanishes or no admissible level")
        return report
    ranks = rank_at_levels(weights, level_lo, level_hi)
    stable = rank(weights, max(critical, level_lo))
    report.details = {"levels": list(range(level_lo, level_hi + 1)), "ranks": ranks}
    for level, r in zip(range(level_lo, level_hi + 1), ranks):
        report.instances_checked += 1
        if level < critical and not r < stable:
            report.failures.append(Failure.of([], f"< {stable}", r, Witness.of("level", level)))
        if level >= critical and r != stable:
            report.failures.append(Failure.of([], stable, r, Witness.of("level", level)))
    for level, (low, high) in enumerate(zip(ranks, ranks[1:]), start=level_lo):
        if high < low:
            report.failures.append(Failure.of([], f">= {low}", high, Witness.of("level", level + 1)))
        elif level + 1 <= critical and 0 < high == low:
            # zero ranks just above a1 may repeat; positive ones must grow
            report.failures.append(Failure.of([], f"> {low}", high, Witness.of("level", level + 1, detail="stall")))
    if weights.n == 4:
        clamped = []
        for level, r in zip(range(level_lo, level_hi + 1), ranks):
            predicted, was_clamped = shifted_rank_4pt(weights, level)
            if was_clamped:
                clamped.append(level)
            if predicted != r:
                report.failures.append(Failure.of([], predicted, r, Witness.of("level", level, detail="shift")))
        report.details["clamped_levels"] = clamped
    return report


def _even_subsets(n: int):
    positions = range(1, n + 1)
    for size in range(0, n + 1, 2):
        yield from itertools.combinations(positions, size)


def check_plussing(n: int, level: int) -> VerificationReport:
    """Ranks are unchanged by replacing an even number of weights a by level - a."""
    items = list(enumerate_weight_vectors(n, level))

    def check(weights: WeightVector) -> VerificationReport:
        report = VerificationReport(proposition_id="plussing")
        r = rank(weights, level)
        for subset in _even_subsets(n):
            report.instances_checked += 1
            image = plussed(weights, level, subset)
            got = rank(image, level)
            if got != r:
                bundle = BundleSpec(Family.SL2, level, weights)
                report.failures.append(
                    Failure.of([bundle], r, got, Witness.of("subset", ",".join(map(str, subset))))
                )
        return report

    def bundles(weights: WeightVector):
        return [BundleSpec(Family.SL2, level, weights)]

    return _collect("plussing", _fan_out(_guarded("plussing", check, bundles), items, "plussing"))


def _wire(data) -> BundleSpec:
    return BundleSpecWire(**data).to_bundle()


def _reproduce_four_point(name: str, entry: dict, report: VerificationReport):
    level, weights = entry["level"], entry["weights"]
    for family, expected in entry["degrees"].items():
        bundle = make_bundle(family, level, weights)
        got_rank = rank(bundle.weights, level)
        if got_rank != entry["rank"]:
            report.failures.append(Failure.of([bundle], entry["rank"], got_rank, Witness.of("example", name)))
        got = deg4_sl2(bundle.weights, level) if bundle.family is Family.SL2 else deg4_sp(bundle.weights, level)
        if got != expected:
            report.failures.append(Failure.of([bundle], expected, got, Witness.of("example", name)))


def _reproduce_coordinates(name: str, entry: dict, report: VerificationReport):
    basis = BOUNDARY_BASES[entry["basis"]]["subsets"]
    for row in entry["rows"]:
        bundle = _wire({k: row[k] for k in ("family", "level", "weights")})
        got_rank = rank(bundle.weights, bundle.level)
        if got_rank != row["rank"]:
            report.failures.append(Failure.of([bundle], row["rank"], got_rank, Witness.of("example", name)))
        coords = divisor_class(bundle, basis, entry["basis"]).as_strings()
        expected = [str(x) for x in row["coords"]]
        if coords != expected:
            positions = [i for i, (x, y) in enumerate(zip(expected, coords), start=1) if x != y]
            report.failures.append(
                Failure.of(
                    [bundle],
                    ",".join(expected),
                    ",".join(coords),
                    Witness.of("coordinates", ",".join(map(str, positions)), detail=name),
                )
            )


def _reproduce_decomposition(name: str, entry: dict, report: VerificationReport):
    target = _wire(entry["target"])
    parts = [_wire(part) for part in entry["parts"]]
    if not verify_sum_decomposition(target, parts):
        report.failures.append(Failure.of([target], "sum of level-one classes", "mismatch", Witness.of("example", name)))


REPRODUCERS = {
    "four_point": _reproduce_four_point,
    "coordinates": _reproduce_coordinates,
    "decomposition": _reproduce_decomposition,
}


def reproduce_reference_examples(expected: Optional[dict] = None) -> VerificationReport:
    """Recompute every published example and compare bit for bit."""
    examples = REFERENCE_EXAMPLES if expected is None else expected
    report = VerificationReport(proposition_id="examples")
    groups = {}
    for name, entry in examples.items():
        before = len(report.failures)
        try:
            REPRODUCERS[entry["kind"]](name, entry, report)
        except (CBlocksError, ArithmeticError, KeyError) as e:
            logger.error(f"Error reproducing example {name}: {str(e)}")
            report.failures.append(Failure.of([], "example reproduced", f"{type(e).__name__}: {e}", Witness.of("example", name)))
        report.instances_checked += 1
        groups[name] = len(report.failures) == before
    report.details = {"groups": groups}
    return report


def _four_point_items(level_max: int):
    return [
        (entries, level)
        for level in range(1, level_max + 1)
        for entries in itertools.combinations_with_replacement(range(level, -1, -1), 4)
        if sum(entries) % 2 == 0
    ]


def _spc_four_point(item):
    entries, level = item
    return [BundleSpec(Family.SPC, level, WeightVector(entries))]


def check_degree_formulas(level_max: int = 8) -> VerificationReport:
    """Cross-checks of the four-point degree formulas against each other and the ranks."""

    def check(item) -> VerificationReport:
        entries, level = item
        report = VerificationReport(proposition_id="degrees", instances_checked=1)
        bundle = BundleSpec(Family.SPC, level, WeightVector(entries))

        def fail(expected, got, what: str):
            report.failures.append(Failure.of([bundle], expected, got, Witness.of("formula", what)))

        r = rank(entries, level)
        s = s_parameter(entries, level)
        d_sl2, d_sp = deg4_sl2(entries, level), deg4_sp(entries, level)
        if deg4_sp_rank_form(entries, level) != d_sp:
            fail(d_sp, deg4_sp_rank_form(entries, level), "rank form")
        if d_sl2 > d_sp:
            fail(f"<= {d_sp}", d_sl2, "family inequality")
        if r > 1 and d_sl2 >= d_sp:
            fail(f"< {d_sp}", d_sl2, "strict above rank one")
        if r == 1 and not d_sl2 == d_sp == max(0, s):
            fail(max(0, s), f"{d_sl2},{d_sp}", "rank one equality")
        if r == 0 and (d_sl2 or d_sp):
            fail(0, f"{d_sl2},{d_sp}", "rank zero")
        critical = sum(entries) // 2 - 1
        if critical >= max(1, entries[0]) and level >= critical:
            stable = deg4_sp(entries, critical)
            if d_sp != stable:
                fail(stable, d_sp, "degree stabilization")
        return report

    items = _four_point_items(level_max)
    return _collect("degrees", _fan_out(_guarded("degrees", check, _spc_four_point), items, "degrees"))


def check_rank_one_classification(level_max: int = 8) -> VerificationReport:
    expected_tag = {0: RankOneClass.ZERO, 1: RankOneClass.ONE}

    def check(item) -> VerificationReport:
        entries, level = item
        report = VerificationReport(proposition_id="classify", instances_checked=1)
        r = rank(entries, level)
        expected = expected_tag.get(r, RankOneClass.MORE_THAN_ONE)
        got = classify_rank_one_4pt(entries, level)
        if got is not expected:
            bundle = BundleSpec(Family.SL2, level, WeightVector(entries))
            report.failures.append(Failure.of([bundle], expected.value, got.value))
        return report

    items = _four_point_items(level_max)
    return _collect("classify", _fan_out(_guarded("classify", check), items, "classify"))


def _random_weights(rng: random.Random, n: int, level: int):
    entries = [rng.randint(0, level) for _ in range(n)]
    if sum(entries) % 2:
        entries[0] += -1 if entries[0] > 0 else 1
    return entries


def check_factorization(samples: int = 1000, seed: int = 0, n_max: int = 8, level_max: int = 6) -> VerificationReport:
    """Randomized bipartitions: every factorization sum reproduces the rank."""
    rng = random.Random(seed)
    items = []
    for _ in range(samples):
        n = rng.randint(2, n_max)
        level = rng.randint(1, level_max)
        entries = _random_weights(rng, n, level)
        block = [i for i in range(1, n + 1) if rng.random() < 0.5]
        items.append((tuple(entries), level, tuple(block)))

    def check(item) -> VerificationReport:
        entries, level, block = item
        report = VerificationReport(proposition_id="factorization", instances_checked=1)
        expected, got = rank(entries, level), factorize(entries, level, block)
        if expected != got:
            bundle = make_bundle(Family.SL2, level, entries)
            report.failures.append(
                Failure.of([bundle], expected, got, Witness.of("block", ",".join(map(str, block))))
            )
        return report

    return _collect("factorization", _fan_out(_guarded("factorization", check), items, "factorization"))


def rank_one_bases(count: int = 20, n_values=(4, 5), level_max: int = 3) -> List[BundleSpec]:
    """The first ``count`` nontrivial rank-one sp bundles in enumeration order."""
    bases = []
    for n in n_values:
        for level in range(1, level_max + 1):
            for weights in enumerate_weight_vectors(n, level):
                if weights.total >= 2 and rank(weights, level) == 1:
                    bases.append(BundleSpec(Family.SPC, level, weights))
                    if len(bases) == count:
                        return bases
    return bases


def check_scaling(bases: Optional[Sequence[BundleSpec]] = None, factor_max: int = 4) -> VerificationReport:
    bases = list(bases) if bases is not None else rank_one_bases()
    items = [(base, factor) for base in bases for factor in range(1, factor_max + 1)]

    def check(item) -> VerificationReport:
        base, factor = item
        report = VerificationReport(proposition_id="scaling", instances_checked=1)
        if not verify_scaling(base, factor):
            report.failures.append(Failure.of([base], f"{factor} x class", "mismatch", Witness.of("factor", factor)))
        return report

    return _collect("scaling", _fan_out(_guarded("scaling", check, lambda item: [item[0]]), items, "scaling"))


def positive_rank_one_markings(n_values=(4, 5), level_max: int = 3) -> List[BundleSpec]:
    """Rank-one sp bundles with positive weights, in every distinct point order."""
    bundles = []
    for n in n_values:
        for level in range(1, level_max + 1):
            for weights in enumerate_weight_vectors(n, level):
                if weights.entries[-1] == 0 or rank(weights, level) != 1:
                    continue
                for marking in sorted(set(itertools.permutations(weights.entries)), reverse=True):
                    bundles.append(make_bundle(Family.SPC, level, marking))
    return bundles


def check_additivity(n_values=(4, 5), level_max: int = 3) -> VerificationReport:
    """
    Rank-one classes add: the bundle at the summed level with pointwise summed
    weights has the sum of the two classes whenever it has rank one itself.
    Pairs whose sum has a larger rank are counted as skipped.
    """
    bases = positive_rank_one_markings(n_values, level_max)
    items = [(first, second) for first in bases for second in bases if first.n == second.n]
    logger.info(f"additivity: {len(bases)} rank-one bases, {len(items)} ordered pairs")

    def check(item) -> VerificationReport:
        first, second = item
        report = VerificationReport(proposition_id="additivity")
        try:
            holds = verify_additivity(first, second)
        except RankNotOne:
            report.skipped += 1
            return report
        report.instances_checked += 1
        if not holds:
            report.failures.append(Failure.of([first, second], "sum of classes", "mismatch"))
        return report

    return _collect("additivity", _fan_out(_guarded("additivity", check, list), items, "additivity"))


def check_nonvanishing(n: int, level_max: int) -> VerificationReport:
    """An sp level-one class is nonzero iff the rank is positive at the level and at the stabilizing rank."""
    if n < 4:
        return VerificationReport(proposition_id="nonvanishing", notes=[f"n={n} has no F-curves; nothing to check"])
    items = [
        BundleSpec(Family.SPC, level, weights)
        for weights in enumerate_weight_vectors(n, level_max)
        for level in range(max(1, weights.max_entry), level_max + 1)
    ]

    def check(bundle: BundleSpec) -> VerificationReport:
        report = VerificationReport(proposition_id="nonvanishing", instances_checked=1)
        weights = bundle.weights
        if weights.total < 2:
            at_critical = 0
        else:
            critical = stabilizing_lie_rank(weights)
            at_critical = rank(weights, critical) if weights.max_entry <= critical else 0
        expected = not (rank(weights, bundle.level) > 0 and at_critical > 0)
        got = is_trivial(bundle)
        if got != expected:
            report.failures.append(
                Failure.of([bundle], "trivial" if expected else "nontrivial", "trivial" if got else "nontrivial")
            )
        return report

    return _collect(
        "nonvanishing", _fan_out(_guarded("nonvanishing", check, lambda b: [b]), items, "nonvanishing")
    )


def check_decomposition(entry: Optional[dict] = None) -> VerificationReport:
    """The level-one decomposition holds, and no summand can be dropped from it."""
    entry = entry or REFERENCE_EXAMPLES["level_one_sum"]
    report = VerificationReport(proposition_id="decomposition", instances_checked=1)
    target = _wire(entry["target"])
    parts = [_wire(part) for part in entry["parts"]]
    if not verify_sum_decomposition(target, parts):
        report.failures.append(Failure.of([target], "sum of summands", "mismatch"))
    redundant = redundant_summands(target, parts)
    report.details = {"summands": len(parts), "redundant": redundant}
    if redundant:
        report.notes.append(f"summands {redundant} can be dropped individually")
    return report
