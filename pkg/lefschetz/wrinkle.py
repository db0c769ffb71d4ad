"""
Wrinkling

Purpose: Count-level bookkeeping for trading Lefschetz singularities for
triple cuspoids
"""

from dataclasses import dataclass
from typing import Optional, Tuple
import logging

from core import InvalidFibrationError, Surface

from .fibration import LefschetzFibration, VanishingCycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WrinkledRecord:
    """Fiber, the Lefschetz cycles still present, and the cuspoid count."""
    fiber: Surface
    lefschetz_remaining: Tuple[VanishingCycle, ...]
    cuspoids: int = 0
    central_genus: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "lefschetz_remaining", tuple(self.lefschetz_remaining))
        if self.central_genus is None:
            object.__setattr__(self, "central_genus", self.fiber.genus + self.cuspoids)
        if self.central_genus != self.fiber.genus + self.cuspoids:
            raise InvalidFibrationError(
                f"central genus {self.central_genus} != fiber genus {self.fiber.genus} + {self.cuspoids} cuspoids"
            )

    @classmethod
    def from_fibration(cls, L: LefschetzFibration) -> "WrinkledRecord":
        return cls(L.fiber, L.cycles)

    def is_wrinkled(self) -> bool:
        return not self.lefschetz_remaining


def wrinkle_step(record: WrinkledRecord) -> WrinkledRecord:
    """Wrinkle the first remaining Lefschetz singularity."""
    if record.is_wrinkled():
        raise InvalidFibrationError("no Lefschetz singularity left to wrinkle")
    return WrinkledRecord(record.fiber, record.lefschetz_remaining[1:], record.cuspoids + 1)


def wrinkle(L: LefschetzFibration) -> WrinkledRecord:
    """Wrinkle every Lefschetz singularity; a fibration without any is its own fixpoint."""
    record = WrinkledRecord.from_fibration(L)
    while not record.is_wrinkled():
        record = wrinkle_step(record)
    logger.debug(f"wrinkled {L}: {record.cuspoids} cuspoids, central genus {record.central_genus}")
    return record
