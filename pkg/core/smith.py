"""
Smith Normal Form

Purpose: Unimodular reduction of integer matrices and cokernel invariants.
A = U · D · V with U, V unimodular and D diagonal with d_1 | d_2 | ...
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple
import logging

from .intmatrix import IntMatrix

logger = logging.getLogger(__name__)


class SmithForm(NamedTuple):
    """Decomposition A = U · D · V."""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


class _Reducer:
    """
    Row/column reduction keeping A_original = U · A · V at every step.

    A row operation A <- E·A is recorded as U <- U·E^{-1}; a column
    operation A <- A·F as V <- F^{-1}·V.
    """

    def __init__(self, matrix: IntMatrix):
        self.a = matrix.to_lists()
        self.m = matrix.rows
        self.n = matrix.cols
        self.u = IntMatrix.identity(self.m).to_lists()
        self.v = IntMatrix.identity(self.n).to_lists()

    # row operations ----------------------------------------------------

    def swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        for row in self.u:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row_target += factor * row_source"""
        self.a[target] = [x + factor * y for x, y in zip(self.a[target], self.a[source])]
        for row in self.u:
            row[source] -= factor * row[target]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        for row in self.u:
            row[i] = -row[i]

    # column operations -------------------------------------------------

    def swap_columns(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        self.v[i], self.v[j] = self.v[j], self.v[i]

    def add_column(self, target: int, source: int, factor: int) -> None:
        """col_target += factor * col_source"""
        for row in self.a:
            row[target] += factor * row[source]
        self.v[source] = [x - factor * y for x, y in zip(self.v[source], self.v[target])]

    # pivoting ----------------------------------------------------------

    def _smallest_entry(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                value = self.a[i][j]
                if value != 0 and (best is None or abs(value) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def _non_divisible_row(self, t: int) -> Optional[int]:
        pivot = self.a[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.a[i][j] % pivot != 0:
                    return i
        return None

    def reduce(self) -> None:
        for t in range(min(self.m, self.n)):
            position = self._smallest_entry(t)
            if position is None:
                return
            self.swap_rows(t, position[0])
            self.swap_columns(t, position[1])
            while True:
                if self._clear_column(t) and self._clear_row(t):
                    row = self._non_divisible_row(t)
                    if row is None:
                        break
                    self.add_row(t, row, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)

    def _clear_column(self, t: int) -> bool:
        """Reduce column t below the pivot; False if the pivot had to move."""
        for i in range(t + 1, self.m):
            if self.a[i][t] != 0:
                self.add_row(i, t, -(self.a[i][t] // self.a[t][t]))
        remainders = [i for i in range(t + 1, self.m) if self.a[i][t] != 0]
        if not remainders:
            return True
        smallest = min(remainders, key=lambda i: abs(self.a[i][t]))
        self.swap_rows(t, smallest)
        return False

    def _clear_row(self, t: int) -> bool:
        """Reduce row t right of the pivot; False if the pivot had to move."""
        for j in range(t + 1, self.n):
            if self.a[t][j] != 0:
                self.add_column(j, t, -(self.a[t][j] // self.a[t][t]))
        remainders = [j for j in range(t + 1, self.n) if self.a[t][j] != 0]
        if not remainders:
            return True
        smallest = min(remainders, key=lambda j: abs(self.a[t][j]))
        self.swap_columns(t, smallest)
        return False


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """
    Smith normal form with the divisibility-normalized diagonal.

    Args:
        matrix: integer matrix of any shape

    Returns:
        SmithForm(U, D, V) with matrix == U @ D @ V exactly
    """
    reducer = _Reducer(matrix)
    reducer.reduce()
    form = SmithForm(
        U=IntMatrix.from_rows(reducer.u, cols=matrix.rows),
        D=IntMatrix.from_rows(reducer.a, cols=matrix.cols),
        V=IntMatrix.from_rows(reducer.v, cols=matrix.cols),
    )
    logger.debug(f"Smith form of {matrix.shape} matrix: diagonal={form.D.diagonal()}")
    return form


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/t."""
    torsion: Tuple[int, ...]
    free_rank: int

    def invariants(self) -> List[int]:
        """Torsion coefficients followed by one 0 per free summand."""
        return list(self.torsion) + [0] * self.free_rank

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def cokernel(matrix: IntMatrix) -> AbelianGroup:
    """
    Cokernel of Z^cols -> Z^rows.

    Returns:
        AbelianGroup with invariant factors > 1 and the free rank
    """
    diagonal = smith_normal_form(matrix).D.diagonal()
    nonzero = [d for d in diagonal if d != 0]
    return AbelianGroup(
        torsion=tuple(d for d in nonzero if d > 1),
        free_rank=matrix.rows - len(nonzero),
    )
