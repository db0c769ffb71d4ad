"""
Surfaces and Homology

Purpose: Compact oriented surfaces F_{g,b} with the canonical first-homology
basis (a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}) and its intersection form.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .errors import HomologyMismatchError, InvalidSurfaceError
from .intmatrix import IntMatrix


@dataclass(frozen=True)
class HomologyClass:
    """Integer coefficient vector in a surface's canonical basis."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(x) for x in self.coefficients))

    @classmethod
    def of(cls, values: Iterable[int]) -> "HomologyClass":
        return cls(coefficients=tuple(values))

    def __len__(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coefficients)

    def to_list(self) -> List[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class Surface:
    """Connected compact oriented surface of given genus and boundary count."""
    genus: int
    boundary: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise InvalidSurfaceError(
                f"surface needs genus >= 0 and boundary >= 0, got ({self.genus}, {self.boundary})"
            )

    @property
    def h1_rank(self) -> int:
        return 2 * self.genus + max(self.boundary - 1, 0)

    @property
    def euler(self) -> int:
        return surface_euler(self)

    # canonical classes, 1-indexed as in a_i, b_i, d_j ----------------

    def _unit(self, index: int) -> HomologyClass:
        values = [0] * self.h1_rank
        values[index] = 1
        return HomologyClass(tuple(values))

    def class_a(self, i: int) -> HomologyClass:
        if not 1 <= i <= self.genus:
            raise HomologyMismatchError(f"a_{i} does not exist on {self}")
        return self._unit(2 * (i - 1))

    def class_b(self, i: int) -> HomologyClass:
        if not 1 <= i <= self.genus:
            raise HomologyMismatchError(f"b_{i} does not exist on {self}")
        return self._unit(2 * (i - 1) + 1)

    def class_d(self, j: int) -> HomologyClass:
        if not 1 <= j <= self.boundary - 1:
            raise HomologyMismatchError(f"d_{j} does not exist on {self}")
        return self._unit(2 * self.genus + j - 1)

    def basis_labels(self) -> List[str]:
        labels = []
        for i in range(1, self.genus + 1):
            labels += [f"a{i}", f"b{i}"]
        labels += [f"d{j}" for j in range(1, self.boundary)]
        return labels

    def check_class(self, c: HomologyClass) -> None:
        if len(c) != self.h1_rank:
            raise HomologyMismatchError(
                f"class of length {len(c)} on {self} (H1 rank {self.h1_rank})"
            )

    def pairing(self, x: HomologyClass, y: HomologyClass) -> int:
        """Algebraic intersection <x, y> = x^T J y."""
        self.check_class(x)
        self.check_class(y)
        total = 0
        for i in range(self.genus):
            a, b = 2 * i, 2 * i + 1
            total += x.coefficients[a] * y.coefficients[b] - x.coefficients[b] * y.coefficients[a]
        return total

    def __str__(self) -> str:
        return f"F({self.genus},{self.boundary})"


def surface_euler(s: Surface) -> int:
    """chi(F_{g,b}) = 2 - 2g - b."""
    return 2 - 2 * s.genus - s.boundary


def intersection_form(s: Surface) -> IntMatrix:
    """Standard symplectic form; boundary classes pair to zero with everything."""
    size = s.h1_rank
    grid = [[0] * size for _ in range(size)]
    for i in range(s.genus):
        grid[2 * i][2 * i + 1] = 1
        grid[2 * i + 1][2 * i] = -1
    return IntMatrix.from_rows(grid, cols=size)

