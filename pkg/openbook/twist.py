"""
Dehn Twists

Purpose: Signed Dehn twist letters and their action on first homology
"""

from dataclasses import dataclass

from core import HomologyClass, HomologyMismatchError, IntMatrix, Surface, intersection_form

from .stabilization import check_sign


@dataclass(frozen=True)
class TwistLetter:
    """tau^{sign}_curve on page component `component_index`."""
    curve: HomologyClass
    component_index: int
    sign: int

    def __post_init__(self):
        check_sign(self.sign)
        if self.component_index < 0:
            raise HomologyMismatchError(f"negative component index {self.component_index}")

    def inverse(self) -> "TwistLetter":
        return TwistLetter(self.curve, self.component_index, -self.sign)

    def on_component(self, index: int) -> "TwistLetter":
        return TwistLetter(self.curve, index, self.sign)


def transvection_matrix(s: Surface, c: HomologyClass, sign: int) -> IntMatrix:
    """
    Homology action of tau^{sign}_c: x -> x + sign * <c, x> * c.

    As a matrix T = I + sign * c (c^T J); T^T J T = J.
    """
    s.check_class(c)
    check_sign(sign)
    size = s.h1_rank
    form = intersection_form(s)
    # row vector c^T J
    covector = [sum(c.coefficients[i] * form[i, j] for i in range(size)) for j in range(size)]
    grid = [
        [(1 if i == j else 0) + sign * c.coefficients[i] * covector[j] for j in range(size)]
        for i in range(size)
    ]
    return IntMatrix.from_rows(grid, cols=size)
