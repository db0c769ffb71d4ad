"""
Trisected Cobordisms

Purpose: Morphisms between boundary open books, composition by gluing, identities
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from core import GluingError
from openbook import OpenBook
from trisection import ClosedTrisection, RelativeTrisection, require_valid

from .glue import GluePairing, glue


@dataclass(frozen=True)
class TriMorphism:
    """
    A relatively trisected cobordism.

    `source` and `target` index the trisection's boundary components and
    together cover each index exactly once. Source components are stored as
    they sit on the boundary; the source objects are their mirrors.
    """
    trisection: Union[RelativeTrisection, ClosedTrisection]
    source: Tuple[int, ...]
    target: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        indices = list(self.source) + list(self.target)
        if sorted(indices) != list(range(len(self.trisection.boundary))):
            raise GluingError(
                f"source {list(self.source)} and target {list(self.target)} must partition "
                f"the {len(self.trisection.boundary)} boundary components"
            )

    @classmethod
    def from_source(cls, trisection: Union[RelativeTrisection, ClosedTrisection], source) -> "TriMorphism":
        """Every component not in `source` becomes target, in index order."""
        source = tuple(source)
        target = tuple(i for i in range(len(trisection.boundary)) if i not in source)
        return cls(trisection, source, target)


def source_objects(f: TriMorphism) -> List[OpenBook]:
    return [f.trisection.boundary[i].mirror() for i in f.source]


def target_objects(f: TriMorphism) -> List[OpenBook]:
    return [f.trisection.boundary[i] for i in f.target]


def compose(f: TriMorphism, g: TriMorphism) -> TriMorphism:
    """
    g after f: glue f.target[i] to g.source[i].

    The composite lists f's source components first, then g's targets.
    """
    if len(f.target) != len(g.source):
        raise GluingError(f"f has {len(f.target)} target objects, g has {len(g.source)} source objects")
    if not f.target:
        raise GluingError("composition along the empty object is not a gluing")
    pairing = GluePairing(tuple(zip(f.target, g.source)))
    glued = glue(f.trisection, g.trisection, pairing)

    unpaired_f = [i for i in range(len(f.trisection.boundary)) if i not in f.target]
    unpaired_g = [j for j in range(len(g.trisection.boundary)) if j not in g.source]
    source = tuple(unpaired_f.index(i) for i in f.source)
    target = tuple(len(unpaired_f) + unpaired_g.index(j) for j in g.target)
    return TriMorphism(glued, source, target)


def identity_trisection(ob: OpenBook) -> TriMorphism:
    """
    Trisection of M x I for the single-page open book `ob` on M.

    For page (p, b): G = 6p + 2b - 2, surface boundary 2b, k = 4p + 2b - 2.
    """
    ob.require_valid()
    if ob.component_count != 1:
        raise GluingError(f"identity needs a single-page open book, got {ob.component_count} pages")
    page = ob.pages[0]
    trisection = RelativeTrisection(
        6 * page.genus + 2 * page.boundary - 2,
        2 * page.boundary,
        4 * page.genus + 2 * page.boundary - 2,
        (ob.mirror(), ob),
    )
    require_valid(trisection)
    return TriMorphism(trisection, (0,), (1,))
