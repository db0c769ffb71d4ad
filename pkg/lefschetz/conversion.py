"""
Trisections from Handle Data

Purpose: Relative trisection parameters from a handle decomposition
relative to boundary open books, and from Lefschetz fibrations
"""

from typing import Optional, Sequence, Tuple
import logging

from core import InvalidFibrationError, InvalidTrisectionError, OracleMismatchError, Surface, surface_euler
from openbook import OpenBook
from trisection import RelativeTrisection, euler, require_valid

from .fibration import LefschetzFibration, induced_open_book

logger = logging.getLogger(__name__)


def handle_euler(pages: Sequence[Tuple[int, int]], h1: int, h2: int) -> int:
    """
    chi from the handle count: the boundary collar contributes 2m - 2p - b,
    each 1-handle -1 and each 2-handle +1 (3-handles pair with 1-handles).
    """
    m = len(pages)
    p = sum(genus for genus, _ in pages)
    b = sum(boundary for _, boundary in pages)
    return (2 * m - 2 * p - b) - 2 * h1 + h2


def trisection_from_open_book_handles(
    pages: Sequence[Tuple[int, int]],
    h1: int,
    h2: int,
    c: Optional[int] = None,
) -> RelativeTrisection:
    """
    Trisection skeleton (trivial monodromy words) for a 4-manifold built from
    boundary pages with h1 1-handles and h2 2-handles whose attaching link has
    c crossings in a projection onto the pages.

    Extra crossings are absorbed by canceling 1-2 and 2-3 pairs, after which
    every 2-handle contributes one splitting stabilization:
        h1' = h1 + c - h2, h2' = 2c - h2
        k = l + h1' - m + 1, g_base = p + h1' - m + 1, G = g_base + h2'

    Raises:
        InvalidTrisectionError: h1 < m - 1, c < h2, or an empty page list
        OracleMismatchError: the result disagrees with the handle count
    """
    if c is None:
        c = h2
    pages = [(int(genus), int(boundary)) for genus, boundary in pages]
    m = len(pages)
    problems = []
    if m < 1:
        problems.append("no boundary pages")
    if h1 < 0 or h2 < 0:
        problems.append(f"negative handle counts h1={h1}, h2={h2}")
    if h1 < m - 1:
        problems.append(f"h1={h1} < m - 1 = {m - 1}: pieces would be disconnected")
    if c < h2:
        problems.append(f"crossings c={c} < h2={h2}")
    if problems:
        raise InvalidTrisectionError(problems)

    surfaces = [Surface(genus, boundary) for genus, boundary in pages]
    p = sum(s.genus for s in surfaces)
    b = sum(s.boundary for s in surfaces)
    l = sum(2 * s.genus + s.boundary - 1 for s in surfaces)
    ones = h1 + (c - h2)
    twos = 2 * c - h2
    k = l + ones - m + 1
    g_base = p + ones - m + 1
    result = RelativeTrisection(g_base + twos, b, k, tuple(OpenBook.single(s) for s in surfaces))
    require_valid(result)

    expected = handle_euler(pages, h1, h2)
    if euler(result) != expected:
        logger.error(f"handle count gives chi={expected}, trisection {result} gives {euler(result)}")
        raise OracleMismatchError(f"chi {euler(result)} != handle count {expected}")
    logger.debug(f"handles h1={h1}, h2={h2}, c={c} over {pages} -> {result}")
    return result


def lf_to_trisection(L: LefschetzFibration, crossings: Optional[int] = None) -> RelativeTrisection:
    """
    Relative trisection of the total space of L, carrying its induced open book.

    Lefschetz 2-handles are wrinkled one at a time and pushed into the
    trisection surface; no 1-handles are needed.
    """
    for index, cycle in enumerate(L.cycles):
        if cycle.curve.is_zero():
            raise InvalidFibrationError(f"vanishing cycle {index} is null-homologous")
    skeleton = trisection_from_open_book_handles(
        [(L.fiber.genus, L.fiber.boundary)], 0, L.n, L.n if crossings is None else crossings
    )
    result = skeleton.with_boundary(0, induced_open_book(L))
    require_valid(result)
    if euler(result) != surface_euler(L.fiber) + L.n:
        raise OracleMismatchError(f"chi({result}) != chi(fiber) + {L.n}")
    return result
