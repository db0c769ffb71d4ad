"""
Lefschetz Fibrations

Purpose: Lefschetz fibrations over the disk, wrinkling, and conversion to
relative trisections
"""

from .fibration import (
    VanishingCycle,
    LefschetzFibration,
    induced_open_book,
    stabilize_lefschetz,
    fourmanifold_h1,
)
from .wrinkle import WrinkledRecord, wrinkle_step, wrinkle
from .conversion import handle_euler, trisection_from_open_book_handles, lf_to_trisection

__all__ = [
    'VanishingCycle',
    'LefschetzFibration',
    'induced_open_book',
    'stabilize_lefschetz',
    'fourmanifold_h1',
    'WrinkledRecord',
    'wrinkle_step',
    'wrinkle',
    'handle_euler',
    'trisection_from_open_book_handles',
    'lf_to_trisection',
]
