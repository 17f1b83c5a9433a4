from pathlib import Path

import pytest

from app.core.normalizer import make_bundle

FIXTURES = Path(__file__).resolve().parent / "fixtures"

N6_SL2 = [12, 6, 12, 12, 6, 12, 12, 0, 12, 2, 2, 6, 24, 2, 2, 6]
N6_SPC = [14, 8, 14, 14, 8, 14, 14, 3, 14, 4, 4, 8, 28, 4, 4, 8]
STABLE_ROW_5 = [7, 1, 1, 5, 2, 2, 1, 1, 1, 1, 1, 3, 7, 6, 1, 1]
STABLE_ROW_7 = [12, 5, 3, 10, 5, 5, 4, 4, 3, 5, 3, 7, 14, 11, 4, 4]


@pytest.fixture
def basis_file():
    return FIXTURES / "nonadjacent_m06.txt"


@pytest.fixture
def rank2_pair():
    return make_bundle("sl2", 5, [4, 4, 4, 4]), make_bundle("spc", 5, [4, 4, 4, 4])


@pytest.fixture
def n6_pair():
    weights = [4, 4, 3, 4, 4, 3]
    return make_bundle("sl2", 5, weights), make_bundle("spc", 5, weights)
