"""
Trisection Types

Purpose: Relative and closed trisection parameters and the derived report
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from core import Surface
from openbook import OpenBook


@dataclass(frozen=True)
class RelativeTrisection:
    """
    Relative trisection (G, b, k; boundary open books).

    surface_genus / surface_boundary describe the trisection surface F_{G,b};
    k is the genus of each piece X_i = natural^k S^1 x B^3; boundary holds
    one single-page open book per boundary 3-manifold.
    """
    surface_genus: int
    surface_boundary: int
    k: int
    boundary: Tuple[OpenBook, ...]

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))

    @property
    def m(self) -> int:
        return len(self.boundary)

    @property
    def pages(self) -> Tuple[Surface, ...]:
        return tuple(page for ob in self.boundary for page in ob.pages)

    @property
    def p(self) -> int:
        return sum(page.genus for page in self.pages)

    @property
    def surface(self) -> Surface:
        return Surface(self.surface_genus, self.surface_boundary)

    def with_boundary(self, index: int, ob: OpenBook) -> "RelativeTrisection":
        boundary = list(self.boundary)
        boundary[index] = ob
        return RelativeTrisection(self.surface_genus, self.surface_boundary, self.k, tuple(boundary))

    def parameters(self) -> Tuple[int, int, int, Tuple[Tuple[int, int], ...]]:
        """(G, b, k, ((p_i, b_i), ...)) without monodromy."""
        return (
            self.surface_genus,
            self.surface_boundary,
            self.k,
            tuple((page.genus, page.boundary) for page in self.pages),
        )

    def __str__(self) -> str:
        pages = ", ".join(f"({p.genus},{p.boundary})" for p in self.pages)
        return f"Relative(G={self.surface_genus}, b={self.surface_boundary}, k={self.k}, pages=[{pages}])"


@dataclass(frozen=True)
class ClosedTrisection:
    """(g, k)-trisection of a closed 4-manifold."""
    g: int
    k: int

    @property
    def boundary(self) -> Tuple[OpenBook, ...]:
        return ()

    def __str__(self) -> str:
        return f"Closed(g={self.g}, k={self.k})"


@dataclass(frozen=True)
class DerivedReport:
    """
    Derived quantities of a trisection, plus every violated invariant.

    Closed trisections fill only g/k/chi; the relative-only fields stay None.
    """
    kind: str
    G: int
    k: int
    b: int = 0
    m: int = 0
    p: int = 0
    g_base: Optional[int] = None
    n: Optional[int] = None
    s: Optional[int] = None
    l_i: Tuple[int, ...] = ()
    l: int = 0
    chi: Optional[int] = None
    violations: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def as_dict(self) -> Dict[str, Any]:
        """Ordered report fields for output."""
        if self.kind == "closed":
            return {"g": self.G, "k": self.k, "chi": self.chi, "valid": self.is_valid}
        return {
            "G": self.G,
            "b": self.b,
            "k": self.k,
            "m": self.m,
            "p": self.p,
            "g_base": self.g_base,
            "n": self.n,
            "s": self.s,
            "l_i": list(self.l_i),
            "l": self.l,
            "chi": self.chi,
            "valid": self.is_valid,
        }
