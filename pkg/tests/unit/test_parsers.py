import pytest

from app.core.errors import MalformedInput
from app.core.parsers.bundle_parser import parse_basis_file, parse_fcurve, parse_weights
from app.models.curves import FCurve


def test_parse_weights():
    assert parse_weights("4,4,4,4") == [4, 4, 4, 4]
    assert parse_weights(" 1, 2 ,2,1") == [1, 2, 2, 1]
    for bad in ["", "1,,2", "a,b", "1;2"]:
        with pytest.raises(MalformedInput):
            parse_weights(bad)


def test_parse_fcurve():
    assert parse_fcurve("1|2|3|456") == FCurve(((1,), (2,), (3,), (4, 5, 6)))
    assert parse_fcurve("456|2|3|1") == parse_fcurve("1|2|3|456")
    assert parse_fcurve("1,10|2|3|4,5,6,7,8,9").blocks[0] == (1, 10)
    for bad in ["1|2|3", "1|2||34", "1|2|3|4x", "1|2|3|3"]:
        with pytest.raises(MalformedInput):
            parse_fcurve(bad)


def test_parse_basis_file(basis_file, tmp_path):
    subsets = parse_basis_file(basis_file)
    assert len(subsets) == 16
    assert subsets[0] == [1, 3] and subsets[-1] == [1, 4, 6]
    other = tmp_path / "basis.txt"
    other.write_text("3,1\n\n# comment\n2 4 1\n")
    assert parse_basis_file(other) == [[1, 3], [1, 2, 4]]
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    with pytest.raises(MalformedInput):
        parse_basis_file(empty)
    with pytest.raises(MalformedInput):
        parse_basis_file(tmp_path / "missing.txt")
