import argparse

from app.cli import controllers
from config.config import SCAN_CONFIG


def _bundle_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--family", choices=["sl2", "spc"], required=True)
    parser.add_argument("--level", type=int, required=True, help="sl2 level, or the Lie rank for spc")
    parser.add_argument("--weights", required=True, help="comma separated, e.g. 4,4,4,4")
    parser.add_argument("--strict-order", action="store_true", help="reject weights not sorted descending")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cblocks",
        description="Ranks, degrees and divisor classes of sl2 and sp level-one conformal-blocks bundles on M_0,n",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    rank = commands.add_parser("rank", help="exact rank of a bundle")
    _bundle_flags(rank)
    rank.set_defaults(handler=controllers.cmd_rank)

    degree4 = commands.add_parser("degree4", help="degree of a four-point bundle on M_0,4")
    _bundle_flags(degree4)
    degree4.set_defaults(handler=controllers.cmd_degree4)

    intersect = commands.add_parser("intersect", help="degree on one F-curve")
    _bundle_flags(intersect)
    intersect.add_argument("--curve", required=True, help="blocks like 1|2|3|456 (commas inside blocks for n >= 10)")
    intersect.set_defaults(handler=controllers.cmd_intersect)

    divisor = commands.add_parser("divisor", help="divisor class in a boundary basis, or its F-curve degrees")
    _bundle_flags(divisor)
    divisor.add_argument("--format", choices=["coords", "fvec"], default="coords")
    divisor.add_argument("--basis", help="file listing boundary subsets, one per line")
    divisor.add_argument("--out", help="write to this path instead of stdout")
    divisor.set_defaults(handler=controllers.cmd_divisor)

    verify = commands.add_parser("verify", help="run a verification scan and print a JSON report")
    verify.add_argument("prop", choices=controllers.PROPOSITIONS)
    verify.add_argument("--n", type=int, default=4, help="number of points (main, plussing, nonvanishing; max for stab scans)")
    verify.add_argument("--lmax", type=int, default=SCAN_CONFIG["max_level"])
    verify.add_argument("--weights", help="weights for stab and mono")
    verify.add_argument("--extra", type=int, default=3, help="levels beyond the stabilizing rank (stab)")
    verify.add_argument("--rhi", type=int, default=10, help="highest level (mono)")
    verify.add_argument("--level", type=int, default=4, help="level (plussing)")
    verify.add_argument("--samples", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-sum", type=int, default=SCAN_CONFIG["max_weight_sum"])
    verify.add_argument("--limit", type=int, default=200, help="weight vectors per stab scan")
    verify.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    verify.add_argument("--out")
    verify.set_defaults(handler=controllers.cmd_verify)

    scan = commands.add_parser("scan", help="CSV table of ranks and class hashes")
    scan.add_argument("--n", type=int, default=4)
    scan.add_argument("--lmax", type=int, default=SCAN_CONFIG["max_level"])
    scan.add_argument("--out")
    scan.set_defaults(handler=controllers.cmd_scan)
    return parser
