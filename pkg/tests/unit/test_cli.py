import io
import json

import pandas as pd

from app.cli.controllers import PROPOSITIONS
from app.cli.routes import build_parser
from app.main import main
from app.models.report import Failure, VerificationReport
from config.config import SCAN_CONFIG
from tests.conftest import N6_SL2, N6_SPC


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rank(capsys):
    assert run(capsys, "rank", "--family", "sl2", "--level", "5", "--weights", "4,4,4,4")[:2] == (0, "2\n")
    assert run(capsys, "rank", "--family", "spc", "--level", "7", "--weights", "5,4,3,2,1,1")[:2] == (0, "10\n")
    assert run(capsys, "rank", "--family", "sl2", "--level", "1", "--weights", "0,0")[:2] == (0, "1\n")


def test_degree4_and_intersect(capsys):
    assert run(capsys, "degree4", "--family", "spc", "--level", "5", "--weights", "4,4,4,4")[1] == "7\n"
    assert run(capsys, "degree4", "--family", "sl2", "--level", "5", "--weights", "1,2,2,1")[1] == "0\n"
    code, out, _ = run(capsys, "intersect", "--family", "spc", "--level", "5", "--weights", "4,4,4,4", "--curve", "1|2|3|4")
    assert (code, out) == (0, "7\n")


def test_divisor_coords(capsys):
    args = ["divisor", "--level", "5", "--weights", "4,4,3,4,4,3"]
    assert run(capsys, *args, "--family", "spc")[1] == ",".join(map(str, N6_SPC)) + "\n"
    assert run(capsys, *args, "--family", "sl2")[1] == ",".join(map(str, N6_SL2)) + "\n"


def test_divisor_with_basis_file(capsys, basis_file, tmp_path):
    out_file = tmp_path / "coords.txt"
    code, out, _ = run(
        capsys, "divisor", "--family", "spc", "--level", "5", "--weights", "4,4,3,4,4,3",
        "--basis", str(basis_file), "--out", str(out_file),
    )
    assert code == 0 and out == ""
    assert out_file.read_text() == ",".join(map(str, N6_SPC)) + "\n"


def test_divisor_fvec(capsys):
    code, out, _ = run(capsys, "divisor", "--family", "sl2", "--level", "1", "--weights", "0,0,0,0,0,0", "--format", "fvec")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "blocks,degree"
    assert len(lines) == 66
    assert lines[1].endswith(",0") and all(line.endswith(",0") for line in lines[1:])


def test_divisor_without_basis_exits_3(capsys):
    code, out, err = run(capsys, "divisor", "--family", "spc", "--level", "2", "--weights", "2,1,1,1,1")
    assert code == 3 and out == ""
    assert err.startswith("error:")


def test_malformed_input_exits_2(capsys):
    code, out, err = run(capsys, "rank", "--family", "sl2", "--level", "3", "--weights", "1,1,1")
    assert code == 2 and out == ""
    assert "OddWeightSum" in err and len(err.strip().splitlines()) == 1
    assert run(capsys, "rank", "--family", "sl2", "--level", "5", "--weights", "1,2,2,1", "--strict-order")[0] == 2
    assert run(capsys, "rank", "--family", "so3", "--level", "5", "--weights", "1,1")[0] == 2
    assert run(capsys, "rank", "--family", "sl2", "--level", "0", "--weights", "0,0")[0] == 2
    assert run(capsys, "intersect", "--family", "sl2", "--level", "5", "--weights", "4,4,4,4", "--curve", "1|2|3")[0] == 2


def test_verify_main(capsys):
    code, out, _ = run(capsys, "verify", "main", "--n", "4", "--lmax", "2")
    report = json.loads(out)
    assert code == 0
    assert report["proposition_id"] == "main" and report["passed"] is True
    assert "elapsed" not in report
    code, out, _ = run(capsys, "verify", "main", "--n", "4", "--lmax", "2", "--timing")
    assert "elapsed" in json.loads(out)


def test_verify_output_is_deterministic(capsys):
    first = run(capsys, "verify", "plussing", "--n", "4", "--level", "3")[1]
    second = run(capsys, "verify", "plussing", "--n", "4", "--level", "3")[1]
    assert first == second


def test_verify_stab(capsys):
    code, out, _ = run(capsys, "verify", "stab", "--weights", "5,4,3,2,1,1", "--extra", "3")
    assert code == 0
    assert json.loads(out)["details"]["levels"] == [7, 8, 9, 10]


def test_verify_failure_exits_1(capsys, monkeypatch):
    def broken(level_max):
        report = VerificationReport(proposition_id="classify", instances_checked=1)
        report.failures.append(Failure(expected="one", got="zero"))
        return report

    monkeypatch.setattr("app.core.validator.check_rank_one_classification", broken)
    code, out, _ = run(capsys, "verify", "classify")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_verify_unknown_prop(capsys):
    assert run(capsys, "verify", "nope")[0] == 2


SCAN_HEADER = "weights,family,level,rank,trivial,class_hash"


def read_scan(text):
    return pd.read_csv(io.StringIO(text), dtype={"weights": str, "class_hash": str})


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n", "4", "--lmax", "2")
    assert code == 0
    assert out.splitlines()[0] == SCAN_HEADER
    frame = read_scan(out)
    assert len(frame) == 24
    assert set(frame["family"]) == {"sl2", "spc"}
    assert frame["class_hash"].str.len().eq(16).all()
    row = frame[(frame["weights"] == "2,2,2,2") & (frame["family"] == "sl2")].iloc[0]
    assert (row["level"], row["rank"]) == (2, 1)


def test_scan_rank_one_pairs_collide(capsys):
    frame = read_scan(run(capsys, "scan", "--n", "4", "--lmax", "1")[1])
    for _, group in frame.groupby(["weights", "level"]):
        assert group["class_hash"].nunique() == 1


def test_scan_empty_and_bad_bounds(capsys, tmp_path):
    out_file = tmp_path / "scan.csv"
    assert run(capsys, "scan", "--n", "4", "--lmax", "0", "--out", str(out_file))[0] == 0
    assert out_file.read_text() == SCAN_HEADER + "\n"
    assert run(capsys, "scan", "--n", "3", "--lmax", "2")[0] == 2


def test_scan_bounds_default_to_config():
    assert set(SCAN_CONFIG) == {"max_level", "max_weight_sum", "progress"}
    parser = build_parser()
    assert parser.parse_args(["scan"]).lmax == SCAN_CONFIG["max_level"]
    verify = parser.parse_args(["verify", "additivity"])
    assert (verify.lmax, verify.max_sum) == (SCAN_CONFIG["max_level"], SCAN_CONFIG["max_weight_sum"])
    assert "additivity" in PROPOSITIONS
