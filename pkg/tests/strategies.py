"""
Hypothesis Strategies

Purpose: Random surfaces, classes, matrices, open books, trisections,
compatible gluing pairs and Lefschetz fibrations for the property suites
"""

import os

from hypothesis import HealthCheck, Phase, seed, settings, strategies as st

from config import SettingsLoader
from core import HomologyClass, IntMatrix, Surface
from gluing import TriMorphism
from lefschetz import LefschetzFibration, VanishingCycle
from openbook import OpenBook, TwistLetter
from trisection import ClosedTrisection, RelativeTrisection

SUITES = SettingsLoader.load().suites

settings.register_profile(
    "tricalc",
    derandomize=True,
    deadline=None,
    database=None,
    max_examples=50,
    phases=[Phase.explicit, Phase.generate],
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.register_profile("tricalc-quick", parent=settings.get_profile("tricalc"), max_examples=25)
settings.register_profile("tricalc-debug", parent=settings.get_profile("tricalc"), phases=list(Phase), print_blob=True)
PROFILE = os.environ.get("TRICALC_HYPOTHESIS_PROFILE", "tricalc")
settings.load_profile(PROFILE)


def suite(name: str):
    """Example count and seed for a named property suite, from config/tricalc.yaml."""
    examples = settings.default.max_examples if PROFILE == "tricalc-quick" else SUITES.count(name)
    count = settings(max_examples=examples)

    def apply(test):
        return seed(SUITES.seed)(count(test))

    return apply


signs = st.sampled_from([1, -1])

# digit d of a drawn index decodes to COEFFICIENTS[d]; index 0 is the zero class
COEFFICIENTS = (0, 1, -1, 2, -2, 3, -3)


def _decode(index: int, rank: int) -> HomologyClass:
    values = []
    for _ in range(rank):
        index, digit = divmod(index, len(COEFFICIENTS))
        values.append(COEFFICIENTS[digit])
    return HomologyClass(tuple(values))


@st.composite
def surfaces(draw, max_genus: int = 3, min_boundary: int = 0, max_boundary: int = 4) -> Surface:
    return Surface(
        draw(st.integers(min_value=0, max_value=max_genus)),
        draw(st.integers(min_value=min_boundary, max_value=max_boundary)),
    )


def classes_on(surface: Surface, nonzero: bool = False):
    """Classes with coefficients in [-3, 3], one draw per class."""
    rank = surface.h1_rank
    indices = st.integers(min_value=1 if nonzero else 0, max_value=len(COEFFICIENTS) ** rank - 1)
    return indices.map(lambda index: _decode(index, rank))


@st.composite
def surface_classes(draw, min_boundary: int = 0):
    surface = draw(surfaces(min_boundary=min_boundary))
    return surface, draw(classes_on(surface))


@st.composite
def int_matrices(draw, max_dim: int = 6, bound: int = 9) -> IntMatrix:
    rows = draw(st.integers(min_value=0, max_value=max_dim))
    cols = draw(st.integers(min_value=0, max_value=max_dim))
    entries = st.integers(min_value=-bound, max_value=bound)
    grid = draw(st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return IntMatrix.from_rows(grid, cols=cols)


@st.composite
def single_page_open_books(draw, max_genus: int = 2, max_boundary: int = 3, max_letters: int = 3) -> OpenBook:
    page = draw(surfaces(max_genus=max_genus, min_boundary=1, max_boundary=max_boundary))
    count = draw(st.integers(min_value=0, max_value=max_letters))
    letters = [TwistLetter(draw(classes_on(page)), 0, draw(signs)) for _ in range(count)]
    return OpenBook.single(page, letters)


@st.composite
def open_books(draw, max_components: int = 3) -> OpenBook:
    components = draw(st.lists(single_page_open_books(), min_size=1, max_size=max_components))
    pages = tuple(ob.pages[0] for ob in components)
    word = [letter.on_component(index) for index, ob in enumerate(components) for letter in ob.word]
    order = draw(st.permutations(range(len(word))))
    return OpenBook(pages, tuple(word[i] for i in order))


def trisection_over(draw, boundary) -> RelativeTrisection:
    """A valid relative trisection with the given boundary open books."""
    boundary = tuple(boundary)
    m = len(boundary)
    p = sum(ob.pages[0].genus for ob in boundary)
    b = sum(ob.pages[0].boundary for ob in boundary)
    g_base = p + draw(st.integers(min_value=0, max_value=3))
    s = draw(st.integers(min_value=0, max_value=3))
    k = g_base - m + p + b
    return RelativeTrisection(g_base + s, b, k, boundary)


@st.composite
def relative_trisections(draw, max_components: int = 3, max_letters: int = 3) -> RelativeTrisection:
    pages = single_page_open_books(max_letters=max_letters)
    boundary = draw(st.lists(pages, min_size=1, max_size=max_components))
    return trisection_over(draw, boundary)


@st.composite
def closed_trisections(draw) -> ClosedTrisection:
    k = draw(st.integers(min_value=0, max_value=4))
    return ClosedTrisection(k + draw(st.integers(min_value=0, max_value=4)), k)


trisections = relative_trisections() | closed_trisections()

# Euler characteristic and the parameter moves never read the monodromy
untwisted_trisections = relative_trisections(max_letters=0) | closed_trisections()


@st.composite
def compatible_pairs(draw):
    """
    (X, W, pairs) where each paired component of W carries the mirror of
    the matching component of X.
    """
    X = draw(relative_trisections())
    glued = draw(st.lists(st.sampled_from(range(X.m)), min_size=1, max_size=X.m, unique=True))
    extras = draw(st.lists(single_page_open_books(), min_size=0, max_size=1))
    w_boundary = [X.boundary[i].mirror() for i in glued] + extras
    order = draw(st.permutations(range(len(w_boundary))))
    W = trisection_over(draw, [w_boundary[i] for i in order])
    pairs = tuple((i, order.index(position)) for position, i in enumerate(glued))
    return X, W, pairs


@st.composite
def composable_triples(draw):
    """Three single-source, single-target morphisms f: a -> b, g: b -> c, h: c -> d."""
    a, b, c, d = draw(st.lists(single_page_open_books(max_letters=2), min_size=4, max_size=4))
    return tuple(
        TriMorphism.from_source(trisection_over(draw, [x.mirror(), y]), (0,))
        for x, y in ((a, b), (b, c), (c, d))
    )


@st.composite
def lefschetz_fibrations(draw, max_cycles: int = 3) -> LefschetzFibration:
    fiber = draw(surfaces(max_genus=2, min_boundary=1, max_boundary=3))
    if fiber.h1_rank == 0:
        return LefschetzFibration(fiber, ())
    count = draw(st.integers(min_value=0, max_value=max_cycles))
    cycles = [VanishingCycle(draw(classes_on(fiber, nonzero=True)), draw(signs)) for _ in range(count)]
    return LefschetzFibration(fiber, tuple(cycles))
