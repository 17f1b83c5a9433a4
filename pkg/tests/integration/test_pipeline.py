import json

from app.core.intersection import intersection_vector, verify_sum_decomposition
from app.core.validator import check_decomposition, reproduce_reference_examples
from app.main import main
from app.models.wire import BundleSpecWire
from config.config import REFERENCE_EXAMPLES


def test_reference_examples_reproduce():
    report = reproduce_reference_examples()
    assert report.passed, report.failures
    assert report.instances_checked == 5
    assert all(report.details["groups"].values())


def test_level_one_decomposition_is_tight():
    entry = REFERENCE_EXAMPLES["level_one_sum"]
    target = BundleSpecWire(**entry["target"]).to_bundle()
    parts = [BundleSpecWire(**part).to_bundle() for part in entry["parts"]]
    assert len(intersection_vector(target).degrees) == 7770
    assert verify_sum_decomposition(target, parts)
    assert not verify_sum_decomposition(target, parts[:-1])
    report = check_decomposition()
    assert report.passed and report.details["redundant"] == []


def test_verify_examples_from_the_command_line(capsys):
    assert main(["verify", "examples"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert sorted(report["details"]["groups"]) == [
        "above_critical",
        "level_one_sum",
        "n6_coordinates",
        "rank2",
        "stable_table",
    ]
