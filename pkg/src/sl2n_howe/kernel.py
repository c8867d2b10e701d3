"""Fraction-free exact null space computation.

Rows are scaled to integers, reduced to echelon form by Bareiss elimination
(pivot = first nonzero entry of the current column, scanning rows in order),
then the kernel basis is read off by rational back substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Integer echelon form and the pivot columns."""
    m = [r for r in _integer_rows(rows) if any(r)]
    nrows = len(m)
    r = 0
    prev = 1
    pivots: List[int] = []
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                num = piv * row[j] - f * prow[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                row[j] = q
            row[col] = 0
        prev = piv
        pivots.append(col)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column (that entry = 1)."""
    ech, pivots = bareiss_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((ech[r][j] * x[j] for j in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / ech[r][pc]
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(bareiss_echelon(rows, ncols)[1])
