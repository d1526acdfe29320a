"""Exact simplex for the set-packing LP ``max sum(x) s.t. A x <= 1, x >= 0``.

``A`` is a 0/1 matrix given column-wise as vertex bitmasks.  The tableau is
kept in integers with integer-preserving pivots: every entry is the true
tableau value times the current basis determinant ``d``, and the update
``(a * p - f * b) / d`` always divides exactly.  No rationals are formed
until the end, which keeps the inner loop on machine-friendly ints.

Pivoting uses the largest-coefficient rule while the objective strictly
improves and Bland's rule from the first degenerate pivot until the next
strict improvement, which rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class PackingSolution:
    value: Fraction
    weights: tuple[Fraction, ...]  # one per column
    prices: tuple[Fraction, ...]  # one per row (vertex): an optimal dual solution
    pivots: int


def solve_packing_lp(columns: Sequence[int], n_rows: int) -> PackingSolution:
    """Solve ``max sum x_j`` subject to ``sum_{j: v in col_j} x_j <= 1`` for each row ``v``."""
    m = len(columns)
    width = m + n_rows + 1
    rhs = width - 1
    tab = [[0] * width for _ in range(n_rows + 1)]
    for j in range(m):
        tab[0][j] = -1
        col = columns[j]
        if col == 0:
            raise ValueError(f"column {j} is empty; the LP is unbounded")
        if col >> n_rows:
            raise ValueError(f"column {j} has a row outside 0..{n_rows - 1}")
        for v in range(n_rows):
            if col >> v & 1:
                tab[v + 1][j] = 1
    for v in range(n_rows):
        tab[v + 1][m + v] = 1
        tab[v + 1][rhs] = 1
    basis = [-1] + [m + v for v in range(n_rows)]
    d = 1
    pivots = 0
    bland = False
    obj = tab[0]

    while True:
        if bland:
            c = next((j for j in range(width - 1) if obj[j] < 0), -1)
        else:
            c, best = -1, 0
            for j in range(width - 1):
                if obj[j] < best:
                    c, best = j, obj[j]
        if c < 0:
            break
        r = -1
        for i in range(1, n_rows + 1):
            a = tab[i][c]
            if a <= 0:
                continue
            if r < 0:
                r = i
                continue
            # compare tab[i][rhs]/a with tab[r][rhs]/tab[r][c]
            lhs = tab[i][rhs] * tab[r][c]
            rhs_val = tab[r][rhs] * a
            if lhs < rhs_val or (lhs == rhs_val and basis[i] < basis[r]):
                r = i
        if r < 0:
            raise ArithmeticError("LP is unbounded")
        degenerate = tab[r][rhs] == 0
        bland = degenerate
        prow = tab[r]
        p = prow[c]
        for i in range(n_rows + 1):
            if i == r:
                continue
            row = tab[i]
            f = row[c]
            if f == 0:
                if p != d:
                    tab[i] = [a * p // d for a in row]
            else:
                tab[i] = [(a * p - f * b) // d for a, b in zip(row, prow)]
        obj = tab[0]
        d = p
        basis[r] = c
        pivots += 1

    weights = [Fraction(0)] * m
    for i in range(1, n_rows + 1):
        if basis[i] < m:
            weights[basis[i]] = Fraction(tab[i][rhs], d)
    prices = tuple(Fraction(obj[m + v], d) for v in range(n_rows))
    return PackingSolution(Fraction(obj[rhs], d), tuple(weights), prices, pivots)
