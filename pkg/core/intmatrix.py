"""
Exact Integer Matrices

Purpose: Immutable integer matrices backed by object-dtype numpy arrays,
so products and reductions use Python's arbitrary-precision integers.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


Row = Tuple[int, ...]


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise TypeError("boolean entries are not integers")
    if isinstance(value, (int, np.integer)):
        return int(value)
    raise TypeError(f"non-integer matrix entry: {value!r}")


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular matrix of exact integers."""
    rows: int
    cols: int
    entries: Tuple[Row, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape ({self.rows}, {self.cols})")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"ragged row of length {len(row)}, expected {self.cols}")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build from nested sequences; `cols` is needed only when there are no rows."""
        entries = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(rows=len(entries), cols=cols, entries=entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows=rows, cols=cols, entries=tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(
            rows=size,
            cols=size,
            entries=tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size)),
        )

    @classmethod
    def diagonal_matrix(cls, rows: int, cols: int, values: Iterable[int]) -> "IntMatrix":
        grid = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            grid[i][i] = _as_int(v)
        return cls.from_rows(grid, cols=cols)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        """Matrix whose columns are the given vectors (each of length `rows`)."""
        for column in columns:
            if len(column) != rows:
                raise ValueError(f"column of length {len(column)}, expected {rows}")
        grid = [[_as_int(columns[j][i]) for j in range(len(columns))] for i in range(rows)]
        return cls.from_rows(grid, cols=len(columns))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        rows, cols = array.shape
        return cls.from_rows([[array[i, j] for j in range(cols)] for i in range(rows)], cols=cols)

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    def to_array(self) -> np.ndarray:
        """Object-dtype copy; entries stay Python ints."""
        array = np.empty((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols == 0:
            # numpy gives no integer zeros for an empty object-dtype contraction
            return IntMatrix.zeros(self.rows, other.cols)
        product = np.dot(self.to_array(), other.to_array())
        return IntMatrix.from_array(product)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(sum(a * int(x) for a, x in zip(row, vector)) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix.from_rows([[-x for x in row] for row in self.entries], cols=self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_diagonal(self) -> bool:
        return all(
            value == 0
            for i, row in enumerate(self.entries)
            for j, value in enumerate(row)
            if i != j
        )

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self == -self.transpose()

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError(f"determinant of non-square matrix {self.shape}")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        previous = 1
        for t in range(n - 1):
            if a[t][t] == 0:
                swap = next((i for i in range(t + 1, n) if a[i][t] != 0), None)
                if swap is None:
                    return 0
                a[t], a[swap] = a[swap], a[t]
                sign = -sign
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // previous
            previous = a[t][t]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.is_square() and self.determinant() in (1, -1)

    def rank(self) -> int:
        from .smith import smith_normal_form
        return sum(1 for d in smith_normal_form(self).D.diagonal() if d != 0)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"
