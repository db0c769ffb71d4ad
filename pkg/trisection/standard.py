"""
Standard Trisections

Purpose: Worked examples used as building blocks and test fixtures
"""

from openbook import OpenBook

from .model import ClosedTrisection, RelativeTrisection


def ball_trisection() -> RelativeTrisection:
    """Trivial trisection of B^4: disk surface, trivial open book on S^3."""
    return RelativeTrisection(0, 1, 0, (OpenBook.trivial(),))


def sphere_cross_interval() -> RelativeTrisection:
    """S^3 x I: annulus surface, each piece a ball, trivial open book at both ends."""
    return RelativeTrisection(0, 2, 0, (OpenBook.trivial(), OpenBook.trivial()))


def sphere_trisection() -> ClosedTrisection:
    """Genus-0 trisection of S^4."""
    return ClosedTrisection(0, 0)
