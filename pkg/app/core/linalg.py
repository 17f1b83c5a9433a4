"""Exact solution of overdetermined integer systems."""
from fractions import Fraction
from math import gcd
from typing import List, Sequence

from app.core.errors import InconsistentSystem, MalformedInput, SingularBasis


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in row]
    return row


def row_echelon(m: List[List[int]]) -> List[int]:
    """
    Fraction-free forward elimination in place on an integer matrix whose
    last column is the right-hand side. Returns the free columns of the
    coefficient part.
    """
    n_rows = len(m)
    n_cols = len(m[0]) - 1
    free_cols = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            free_cols.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = _primitive([fp * x - fr * y for x, y in zip(m[r], m[piv_r])])
        piv_r += 1
    return free_cols


def solve_exact(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[Fraction]:
    """
    Solve ``matrix @ x = rhs`` exactly. The system may have more equations
    than unknowns but must have exactly one solution.
    """
    if not matrix or len(matrix) != len(rhs):
        raise MalformedInput("matrix and right-hand side must be nonempty and of equal length")
    n_cols = len(matrix[0])
    m = [[int(x) for x in row] + [int(t)] for row, t in zip(matrix, rhs)]
    free_cols = row_echelon(m)
    if free_cols:
        raise SingularBasis(f"columns {free_cols} are not determined by the equations")
    for r in range(n_cols, len(m)):
        if m[r][-1] != 0:
            raise InconsistentSystem(f"equation {r} is violated after elimination")
    sol = [Fraction(0)] * n_cols
    for r in range(n_cols - 1, -1, -1):
        s = Fraction(m[r][-1])
        for c in range(r + 1, n_cols):
            s -= m[r][c] * sol[c]
        sol[r] = s / m[r][r]
    return sol
