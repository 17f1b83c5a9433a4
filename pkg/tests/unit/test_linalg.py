from fractions import Fraction

import pytest

from app.core.errors import InconsistentSystem, MalformedInput, SingularBasis
from app.core.linalg import solve_exact


def test_square_system():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_overdetermined_consistent():
    assert solve_exact([[1, 0], [0, 1], [1, 1], [2, -1]], [1, 2, 3, 0]) == [1, 2]


def test_zero_pivot_needs_swap():
    assert solve_exact([[0, 1], [1, 0]], [7, -3]) == [-3, 7]


def test_inconsistent():
    with pytest.raises(InconsistentSystem):
        solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 4])


def test_singular():
    with pytest.raises(SingularBasis):
        solve_exact([[1, 1], [2, 2]], [1, 2])
    with pytest.raises(SingularBasis):
        solve_exact([[1, 2, 3]], [1])


def test_malformed():
    with pytest.raises(MalformedInput):
        solve_exact([[1, 0]], [1, 2])
    with pytest.raises(MalformedInput):
        solve_exact([], [])
