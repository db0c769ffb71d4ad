"""
Trisection Moves

Purpose: Induced boundary open books, interior and relative stabilization,
connected sum, and stable equivalence.
"""

from typing import List
import logging

from core import InvalidTrisectionError, StabilizationError, TrisectionCalcError
from openbook import OpenBook, StabilizationVariant, equivalent, hopf_stabilize

from .model import ClosedTrisection, RelativeTrisection
from .validation import Trisection, euler, require_valid

logger = logging.getLogger(__name__)


def boundary_open_books(T: RelativeTrisection) -> List[OpenBook]:
    """The open book induced on each boundary component."""
    require_valid(T)
    return list(T.boundary)


def interior_stabilize(T: Trisection) -> Trisection:
    """Genus +3, k +1; boundary data untouched."""
    require_valid(T)
    if isinstance(T, ClosedTrisection):
        result = ClosedTrisection(T.g + 3, T.k + 1)
    else:
        result = RelativeTrisection(T.surface_genus + 3, T.surface_boundary, T.k + 1, T.boundary)
    require_valid(result)
    logger.info(f"interior stabilization: {T} -> {result}")
    return result


def relative_stabilize(
    T: RelativeTrisection,
    comp: int,
    variant: StabilizationVariant,
    sign: int,
) -> RelativeTrisection:
    """
    Stabilize relative to boundary open book `comp`.

    k -> k+1; (G, b) -> (G+1, b+1) for same_binding or (G+2, b-1) for
    different_bindings; the chosen open book is Hopf stabilized.
    """
    if not isinstance(T, RelativeTrisection):
        raise StabilizationError("relative stabilization needs a relative trisection")
    require_valid(T)
    if not 0 <= comp < T.m:
        raise StabilizationError(f"no boundary component {comp}; trisection has {T.m}")
    stabilized = hopf_stabilize(T.boundary[comp], 0, variant, sign)
    if variant is StabilizationVariant.SAME_BINDING:
        genus, boundary = T.surface_genus + 1, T.surface_boundary + 1
    else:
        genus, boundary = T.surface_genus + 2, T.surface_boundary - 1
    result = RelativeTrisection(genus, boundary, T.k + 1, T.boundary).with_boundary(comp, stabilized)
    require_valid(result)
    logger.info(f"relative stabilization ({variant.value}, {sign:+d}) at {comp}: {T} -> {result}")
    return result


def connected_sum(T1: Trisection, T2: Trisection) -> Trisection:
    """
    Sum of trisections, relative or closed: parameters add, boundaries concatenate.
    """
    require_valid(T1)
    require_valid(T2)
    if isinstance(T1, ClosedTrisection) and isinstance(T2, ClosedTrisection):
        result = ClosedTrisection(T1.g + T2.g, T1.k + T2.k)
    else:
        result = RelativeTrisection(
            _genus(T1) + _genus(T2),
            _surface_boundary(T1) + _surface_boundary(T2),
            T1.k + T2.k,
            tuple(T1.boundary) + tuple(T2.boundary),
        )
    require_valid(result)
    logger.info(f"connected sum: {T1} # {T2} -> {result}")
    return result


def _genus(T: Trisection) -> int:
    return T.g if isinstance(T, ClosedTrisection) else T.surface_genus


def _surface_boundary(T: Trisection) -> int:
    return 0 if isinstance(T, ClosedTrisection) else T.surface_boundary


def stably_equivalent(T1: Trisection, T2: Trisection) -> bool:
    """
    Equal after finitely many interior stabilizations of both.

    Interior stabilization is (G, k) -> (G+3, k+1) with boundary fixed, so
    the test is identical boundary data and G1 - 3 k1 = G2 - 3 k2.
    """
    if isinstance(T1, ClosedTrisection) != isinstance(T2, ClosedTrisection):
        raise TrisectionCalcError("cannot compare a closed trisection with a relative one")
    require_valid(T1)
    require_valid(T2)
    if isinstance(T1, ClosedTrisection):
        return T1.g - 3 * T1.k == T2.g - 3 * T2.k
    if T1.surface_boundary != T2.surface_boundary or T1.m != T2.m:
        return False
    if not all(equivalent(ob1, ob2) for ob1, ob2 in zip(T1.boundary, T2.boundary)):
        return False
    return T1.surface_genus - 3 * T1.k == T2.surface_genus - 3 * T2.k


def closed_trisection_for_euler(chi: int, g: int) -> ClosedTrisection:
    """
    The (g, k) compatible with chi = 2 + g - 3k; k is forced by g.
    """
    excess = 2 + g - chi
    if g < 0 or excess < 0 or excess % 3 != 0:
        raise InvalidTrisectionError(
            [f"no genus-{g} trisection has chi={chi}: 2 + g - chi = {excess} is not a non-negative multiple of 3"]
        )
    result = ClosedTrisection(g, excess // 3)
    require_valid(result)
    if euler(result) != chi:
        raise InvalidTrisectionError([f"chi of {result} differs from {chi}"])
    return result
