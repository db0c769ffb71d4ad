"""
Lefschetz Fibrations over the Disk

Purpose: Bounded-fiber Lefschetz fibrations, their induced open books,
stabilization by a canceling 1-2 pair, and H1 of the total space
"""

from dataclasses import dataclass
from typing import Tuple
import logging

from core import AbelianGroup, HomologyClass, IntMatrix, InvalidFibrationError, Surface, cokernel
from openbook import OpenBook, StabilizationVariant, TwistLetter, embed_class, stabilized_page, stabilizing_class
from openbook.stabilization import check_sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VanishingCycle:
    """Vanishing cycle class with chirality (+1 right-handed, -1 achiral)."""
    curve: HomologyClass
    chirality: int = 1

    def __post_init__(self):
        object.__setattr__(self, "curve", HomologyClass(tuple(self.curve.coefficients)))
        check_sign(self.chirality)


@dataclass(frozen=True)
class LefschetzFibration:
    """Fiber surface and ordered vanishing cycles."""
    fiber: Surface
    cycles: Tuple[VanishingCycle, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if self.fiber.boundary < 1:
            raise InvalidFibrationError(f"fiber {self.fiber} must have nonempty boundary")
        for index, cycle in enumerate(self.cycles):
            if len(cycle.curve) != self.fiber.h1_rank:
                raise InvalidFibrationError(
                    f"cycle {index} has length {len(cycle.curve)}, fiber {self.fiber} has H1 rank {self.fiber.h1_rank}"
                )

    @property
    def n(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        return f"Lefschetz({self.fiber}, {self.n} cycles)"


def induced_open_book(L: LefschetzFibration) -> OpenBook:
    """Page = fiber; monodromy = the vanishing-cycle twists in order."""
    letters = [TwistLetter(cycle.curve, 0, cycle.chirality) for cycle in L.cycles]
    return OpenBook.single(L.fiber, letters)


def stabilize_lefschetz(L: LefschetzFibration, variant: StabilizationVariant, sign: int) -> LefschetzFibration:
    """
    Attach a canceling 1-2 pair: the fiber gains a Hopf band and the new
    2-handle adds a vanishing cycle about the stabilizing class.
    """
    check_sign(sign)
    fiber = stabilized_page(L.fiber, variant)
    cycles = [VanishingCycle(embed_class(L.fiber, variant, cycle.curve), cycle.chirality) for cycle in L.cycles]
    cycles.append(VanishingCycle(stabilizing_class(L.fiber, variant), sign))
    result = LefschetzFibration(fiber, tuple(cycles))
    logger.info(f"Lefschetz stabilization ({variant.value}, {sign:+d}): {L} -> {result}")
    return result


def fourmanifold_h1(L: LefschetzFibration) -> AbelianGroup:
    """H1 of the total space: H1(fiber) modulo the vanishing cycles."""
    matrix = IntMatrix.from_columns(L.fiber.h1_rank, [cycle.curve.coefficients for cycle in L.cycles])
    return cokernel(matrix)
