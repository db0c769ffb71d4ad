"""
Boundary Gluing

Purpose: Glue two relative trisections along compatible boundary open books

Ledger (X with m components, W with mu components, s glued pairs):
    G_new = G_X + G_W + B - 1          B = sum of binding counts b_j over glued pairs
    b_new = b_X + b_W - 2 B
    k_new = k_X + k_W + s - 1 - sum of l_j over glued pairs
Every result is checked against chi(X) + chi(W).
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union
import logging

from core import GluingError, IncompatibleOpenBooksError, InvalidTrisectionError, OracleMismatchError
from openbook import compatible
from trisection import ClosedTrisection, RelativeTrisection, euler, require_valid, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GluePairing:
    """Injective list of (component of X, component of W) pairs."""
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise GluingError("a gluing needs at least one pair")
        left = [i for i, _ in pairs]
        right = [j for _, j in pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise GluingError(f"pairing {list(pairs)} is not injective")
        if min(left + right) < 0:
            raise GluingError(f"negative index in pairing {list(pairs)}")

    @classmethod
    def parse(cls, specs: Sequence[str]) -> "GluePairing":
        """From strings of the form 'i:j'."""
        pairs = []
        for spec in specs:
            left, sep, right = spec.partition(":")
            if not sep:
                raise GluingError(f"pair '{spec}' is not of the form i:j")
            try:
                pairs.append((int(left), int(right)))
            except ValueError:
                raise GluingError(f"pair '{spec}' is not of the form i:j") from None
        return cls(tuple(pairs))

    @property
    def s(self) -> int:
        return len(self.pairs)

    def left(self) -> List[int]:
        return [i for i, _ in self.pairs]

    def right(self) -> List[int]:
        return [j for _, j in self.pairs]


def glued_surface(gX: Tuple[int, int], gW: Tuple[int, int], circles: int) -> Tuple[int, int]:
    """
    Identify `circles` boundary circles of F_{gX} with as many of F_{gW}.

    The result is connected, so Euler characteristics add.
    """
    (genus_x, boundary_x), (genus_w, boundary_w) = gX, gW
    if circles < 1:
        raise GluingError(f"need at least one circle, got {circles}")
    if circles > boundary_x or circles > boundary_w:
        raise GluingError(
            f"cannot identify {circles} circles of surfaces with {boundary_x} and {boundary_w} boundary circles"
        )
    genus = genus_x + genus_w + circles - 1
    boundary = boundary_x + boundary_w - 2 * circles
    before = (2 - 2 * genus_x - boundary_x) + (2 - 2 * genus_w - boundary_w)
    if 2 - 2 * genus - boundary != before:
        raise OracleMismatchError(f"glued surface ({genus}, {boundary}) breaks Euler additivity")
    return genus, boundary


def paired_genus_oracle(TX: RelativeTrisection, TW: RelativeTrisection, pair: Tuple[int, int]) -> int:
    """
    Trisection surface genus after a single-pair gluing, summed piece by piece:
    the unglued page genera on both sides, the compression excess of each
    side, the glued page's l, plus the splitting stabilizations.
    """
    i, j = pair
    report_x, report_w = require_valid(TX), require_valid(TW)
    glued = TX.pages[i]
    others_x = sum(page.genus for index, page in enumerate(TX.pages) if index != i)
    others_w = sum(page.genus for index, page in enumerate(TW.pages) if index != j)
    return (
        others_x
        + others_w
        + (report_x.n - report_x.m + 1)
        + (report_w.n - report_w.m + 1)
        + (2 * glued.genus + glued.boundary - 1)
        + report_x.s
        + report_w.s
    )


def _check_compatible(TX: RelativeTrisection, TW: RelativeTrisection, pairing: GluePairing, force: bool) -> None:
    for i, j in pairing.pairs:
        if i >= TX.m or j >= TW.m:
            raise GluingError(f"pair ({i}, {j}) out of range: X has {TX.m}, W has {TW.m} components")
        if not compatible(TX.boundary[i], TW.boundary[j], [(0, 0)], force=force):
            raise IncompatibleOpenBooksError(
                f"boundary {i} of X and boundary {j} of W carry incompatible open books"
            )


def glue(
    TX: RelativeTrisection,
    TW: RelativeTrisection,
    pairing: Union[GluePairing, Sequence[Tuple[int, int]]],
    force: bool = False,
) -> Union[RelativeTrisection, ClosedTrisection]:
    """
    Glue W to X along the paired boundary components.

    Unpaired components of X come first in the new boundary, then those of W,
    each side in its original order. Gluing away every component returns a
    ClosedTrisection.

    Raises:
        IncompatibleOpenBooksError: a pair carries different pages or monodromy
        GluingError: pairing malformed or out of range
        InvalidTrisectionError: an input, or the result, violates the constraints
        OracleMismatchError: Euler characteristics fail to add
    """
    if not isinstance(pairing, GluePairing):
        pairing = GluePairing(tuple(pairing))
    for side in (TX, TW):
        if not isinstance(side, RelativeTrisection):
            raise GluingError(f"only relative trisections have boundary to glue, got {side}")
    report_x, report_w = require_valid(TX), require_valid(TW)
    _check_compatible(TX, TW, pairing, force)

    glued_pages = [TX.pages[i] for i in pairing.left()]
    circles = sum(page.boundary for page in glued_pages)
    genus, boundary = glued_surface(
        (TX.surface_genus, TX.surface_boundary), (TW.surface_genus, TW.surface_boundary), circles
    )
    k = TX.k + TW.k + pairing.s - 1 - sum(2 * page.genus + page.boundary - 1 for page in glued_pages)
    logger.debug(
        f"glue ledger: s={pairing.s}, B={circles}, l_glued={[2 * p.genus + p.boundary - 1 for p in glued_pages]}, "
        f"G={genus}, b={boundary}, k={k}"
    )

    if pairing.s == 1:
        expected = paired_genus_oracle(TX, TW, pairing.pairs[0])
        if expected != genus:
            logger.error(f"glued genus {genus} disagrees with piecewise count {expected}")
            raise OracleMismatchError(f"glued genus {genus} != piecewise genus {expected}")

    unpaired_x = [ob for index, ob in enumerate(TX.boundary) if index not in pairing.left()]
    unpaired_w = [ob for index, ob in enumerate(TW.boundary) if index not in pairing.right()]
    if boundary == 0:
        result = ClosedTrisection(genus, k)
    else:
        result = RelativeTrisection(genus, boundary, k, tuple(unpaired_x + unpaired_w))

    report = validate(result)
    if not report.is_valid:
        logger.error(f"glued result {result} is invalid: {list(report.violations)}")
        raise InvalidTrisectionError(report.violations, report)

    expected_chi = report_x.chi + report_w.chi
    if euler(result) != expected_chi:
        logger.error(f"chi({result}) = {euler(result)} but chi(X) + chi(W) = {expected_chi}")
        raise OracleMismatchError(f"Euler characteristic not additive under gluing: {euler(result)} != {expected_chi}")

    logger.info(f"glued {TX} and {TW} along {list(pairing.pairs)} -> {result}")
    return result
