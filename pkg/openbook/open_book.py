"""
Abstract Open Books

Purpose: Open books (pages, monodromy word) with homology-level monodromy,
Hopf stabilization, and the compatibility predicate used for gluing.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple
import logging

from core import IntMatrix, InvalidOpenBookError, StabilizationError, Surface

from .stabilization import (
    StabilizationVariant,
    check_sign,
    embed_class,
    stabilized_page,
    stabilizing_class,
)
from .twist import TwistLetter, transvection_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OpenBook:
    """
    Disjoint union of pages with a monodromy word.

    The word lists letters in composition order tau_1 o tau_2 o ... o tau_n.
    Structural problems (bad component index, wrong class length) raise;
    a closed page is reported by violations() so that callers can list it.
    """
    pages: Tuple[Surface, ...]
    word: Tuple[TwistLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pages", tuple(self.pages))
        object.__setattr__(self, "word", tuple(self.word))
        for position, letter in enumerate(self.word):
            if letter.component_index >= len(self.pages):
                raise InvalidOpenBookError(
                    f"letter {position} references component {letter.component_index}, "
                    f"open book has {len(self.pages)}"
                )
            page = self.pages[letter.component_index]
            if len(letter.curve) != page.h1_rank:
                raise InvalidOpenBookError(
                    f"letter {position} has class of length {len(letter.curve)}, "
                    f"page {page} has H1 rank {page.h1_rank}"
                )

    @classmethod
    def single(cls, page: Surface, letters: Sequence[TwistLetter] = ()) -> "OpenBook":
        """One-page open book; letters are moved onto component 0."""
        return cls(pages=(page,), word=tuple(letter.on_component(0) for letter in letters))

    @classmethod
    def trivial(cls) -> "OpenBook":
        """Disk page, identity monodromy: the trivial open book on S^3."""
        return cls.single(Surface(0, 1))

    @property
    def component_count(self) -> int:
        return len(self.pages)

    def violations(self) -> List[str]:
        problems = []
        if not self.pages:
            problems.append("open book has no pages")
        for index, page in enumerate(self.pages):
            if page.boundary < 1:
                problems.append(f"page {index} is closed {page}; pages need nonempty binding")
        return problems

    def require_valid(self) -> None:
        problems = self.violations()
        if problems:
            raise InvalidOpenBookError("; ".join(problems))

    def letters_on(self, index: int) -> Tuple[TwistLetter, ...]:
        return tuple(letter for letter in self.word if letter.component_index == index)

    def component(self, index: int) -> "OpenBook":
        """Component `index` as a single-page open book."""
        if not 0 <= index < len(self.pages):
            raise InvalidOpenBookError(f"no page component {index}")
        return OpenBook.single(self.pages[index], self.letters_on(index))

    def mirror(self) -> "OpenBook":
        """Orientation reversal: reversed word, every sign flipped."""
        return OpenBook(self.pages, tuple(letter.inverse() for letter in reversed(self.word)))

    def __str__(self) -> str:
        pages = ", ".join(str(p) for p in self.pages)
        return f"OpenBook([{pages}], {len(self.word)} letters)"


def monodromy_action(ob: OpenBook) -> List[IntMatrix]:
    """Per page component, the product T_1 T_2 ... of its letters' transvections."""
    actions = [IntMatrix.identity(page.h1_rank) for page in ob.pages]
    for letter in ob.word:
        page = ob.pages[letter.component_index]
        index = letter.component_index
        actions[index] = actions[index] @ transvection_matrix(page, letter.curve, letter.sign)
    return actions


def hopf_stabilize(
    ob: OpenBook,
    comp: int,
    variant: StabilizationVariant,
    sign: int,
) -> OpenBook:
    """
    Plumb a Hopf band onto page `comp` and append tau^{sign} about the
    canonical stabilizing class.

    Raises:
        StabilizationError: missing component, bad sign, or different_bindings
            on a page with a single binding circle
    """
    check_sign(sign)
    if not 0 <= comp < ob.component_count:
        raise StabilizationError(f"no page component {comp} in {ob}")
    old_page = ob.pages[comp]
    new_page = stabilized_page(old_page, variant)

    word = []
    for letter in ob.word:
        if letter.component_index == comp:
            letter = TwistLetter(embed_class(old_page, variant, letter.curve), comp, letter.sign)
        word.append(letter)
    word.append(TwistLetter(stabilizing_class(old_page, variant), comp, sign))

    pages = list(ob.pages)
    pages[comp] = new_page
    logger.info(f"Hopf stabilization ({variant.value}, {sign:+d}) of page {comp}: {old_page} -> {new_page}")
    return OpenBook(tuple(pages), tuple(word))


def _same_action(ob1: OpenBook, i: int, ob2: OpenBook, j: int) -> bool:
    return monodromy_action(ob1.component(i))[0] == monodromy_action(ob2.component(j))[0]


def _check_pairing(ob1: OpenBook, ob2: OpenBook, pairing: Sequence[Tuple[int, int]]) -> None:
    left = [i for i, _ in pairing]
    right = [j for _, j in pairing]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise InvalidOpenBookError(f"pairing {list(pairing)} is not injective")
    for i, j in pairing:
        if not (0 <= i < ob1.component_count and 0 <= j < ob2.component_count):
            raise InvalidOpenBookError(f"pairing index ({i}, {j}) out of range")


def compatible(
    ob1: OpenBook,
    ob2: OpenBook,
    pairing: Sequence[Tuple[int, int]],
    force: bool = False,
) -> bool:
    """
    Paired components have equal pages and ob2's mirrored word acts like ob1's.

    `force` skips the word comparison, never the page comparison.
    """
    _check_pairing(ob1, ob2, pairing)
    for i, j in pairing:
        if ob1.pages[i] != ob2.pages[j]:
            logger.debug(f"pages differ at pair ({i}, {j}): {ob1.pages[i]} vs {ob2.pages[j]}")
            return False
        if force:
            continue
        if not _same_action(ob1, i, ob2.component(j).mirror(), 0):
            logger.debug(f"monodromy differs at pair ({i}, {j})")
            return False
    return True


def equivalent(ob1: OpenBook, ob2: OpenBook) -> bool:
    """Same pages in order and the same homology action on each."""
    if ob1.pages != ob2.pages:
        return False
    return monodromy_action(ob1) == monodromy_action(ob2)
