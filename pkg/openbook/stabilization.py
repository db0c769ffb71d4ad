"""
Hopf Stabilization Page Bookkeeping

Purpose: Page change and homology embedding for plumbing a Hopf band,
shared by open book and Lefschetz stabilizations.
"""

from enum import Enum

from core import HomologyClass, StabilizationError, Surface


class StabilizationVariant(Enum):
    """Where the feet of the plumbed band sit."""
    SAME_BINDING = "same_binding"
    DIFFERENT_BINDINGS = "different_bindings"

    @classmethod
    def from_flag(cls, flag: str) -> "StabilizationVariant":
        """CLI names: band -> same_binding, handle -> different_bindings."""
        mapping = {
            "band": cls.SAME_BINDING,
            "handle": cls.DIFFERENT_BINDINGS,
            cls.SAME_BINDING.value: cls.SAME_BINDING,
            cls.DIFFERENT_BINDINGS.value: cls.DIFFERENT_BINDINGS,
        }
        try:
            return mapping[flag]
        except KeyError:
            raise StabilizationError(f"unknown stabilization variant: {flag}") from None

    @property
    def flag(self) -> str:
        return "band" if self is StabilizationVariant.SAME_BINDING else "handle"


def check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise StabilizationError(f"twist sign must be +1 or -1, got {sign}")


def stabilized_page(page: Surface, variant: StabilizationVariant) -> Surface:
    """
    (p, b) -> (p, b+1) for same_binding, (p+1, b-1) for different_bindings.
    """
    if page.boundary < 1:
        raise StabilizationError(f"cannot stabilize closed page {page}")
    if variant is StabilizationVariant.SAME_BINDING:
        return Surface(page.genus, page.boundary + 1)
    if page.boundary < 2:
        raise StabilizationError(
            f"different_bindings stabilization needs two binding circles, page {page} has one"
        )
    return Surface(page.genus + 1, page.boundary - 1)


def embed_class(page: Surface, variant: StabilizationVariant, c: HomologyClass) -> HomologyClass:
    """
    Image of a class on `page` in the stabilized page's canonical basis.

    same_binding appends a zero d_b coordinate. different_bindings joins
    boundary circles b-1 and b: d_{b-1} becomes b_{p+1}, the remaining d_j
    keep their index and a_{p+1} gets coefficient zero.
    """
    page.check_class(c)
    values = c.coefficients
    if variant is StabilizationVariant.SAME_BINDING:
        return HomologyClass(values + (0,))
    symplectic = values[:2 * page.genus]
    boundary = values[2 * page.genus:]
    return HomologyClass(symplectic + (0, boundary[-1]) + boundary[:-1])


def stabilizing_class(page: Surface, variant: StabilizationVariant) -> HomologyClass:
    """Canonical class of the new twist, on the stabilized page."""
    new_page = stabilized_page(page, variant)
    if variant is StabilizationVariant.SAME_BINDING:
        return new_page.class_d(new_page.boundary - 1)
    return new_page.class_a(new_page.genus)
