"""Smith normal form and exact determinants over the integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["SmithForm", "smith_normal_form", "bareiss_determinant", "cokernel"]

IntegerMatrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SmithForm:
    """Diagonal ``d_1 | d_2 | ...`` (length ``min(rows, cols)``, zeros last)."""

    diagonal: tuple[int, ...]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)

    @property
    def rank_deficiency(self) -> int:
        """Free rank of the cokernel ``Z^cols / (row space)``."""
        return self.cols - self.rank


def smith_normal_form(matrix: IntegerMatrix) -> SmithForm:
    """Invariant factors by unimodular row and column operations.

    >>> smith_normal_form([[2, 4], [6, 8]]).diagonal
    (2, 4)
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diagonal = []
    for t in range(min(rows, cols)):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            diagonal.extend([0] * (min(rows, cols) - t))
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            # clear column t below the pivot
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _add_row(a, i, t, -q)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _add_col(a, j, t, -q)
                    if a[t][j]:
                        done = False
            if done:
                # pivot must divide every remaining entry
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                _add_row(a, t, bad[0], 1)
                done = False
            # move the smallest remaining entry of row/column t into the pivot
            pivot = _smallest_in_cross(a, t)
            i, j = pivot
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diagonal.append(abs(a[t][t]))
    return SmithForm(tuple(diagonal), rows, cols)


def _smallest_nonzero(a, t):
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            v = a[i][j]
            if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _smallest_in_cross(a, t):
    best = (t, t)
    for i in range(t, len(a)):
        if a[i][t] and (not a[best[0]][best[1]] or abs(a[i][t]) < abs(a[best[0]][best[1]])):
            best = (i, t)
    for j in range(t, len(a[t])):
        if a[t][j] and (not a[best[0]][best[1]] or abs(a[t][j]) < abs(a[best[0]][best[1]])):
            best = (t, j)
    return best


def _add_row(a, target, source, factor):
    src = a[source]
    row = a[target]
    for k in range(len(row)):
        row[k] += factor * src[k]


def _add_col(a, target, source, factor):
    for row in a:
        row[target] += factor * row[source]


def cokernel(matrix: IntegerMatrix, cols: int | None = None) -> list[int]:
    """Nontrivial invariant factors of ``Z^cols / (row space)``; ``0`` marks a ``Z``."""
    form = smith_normal_form(matrix)
    n = form.cols if cols is None else cols
    torsion = [d for d in form.invariant_factors if d != 1]
    return torsion + [0] * (n - form.rank)


def bareiss_determinant(matrix: IntegerMatrix) -> int:
    """Fraction-free Gaussian elimination; exact for integer input."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
