"""
Document Codec

Purpose: Parse and serialize the JSON documents read and written by tricalc.

Keys are fixed and emitted in a fixed order with two-space indentation and
a trailing newline, so serialize(parse(text)) == text for canonical text.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Union
import json

from core import DocumentSyntaxError, HomologyClass, SchemaError, Surface
from gluing import TriMorphism
from lefschetz import LefschetzFibration, VanishingCycle
from openbook import OpenBook, TwistLetter
from trisection import ClosedTrisection, RelativeTrisection


class DocumentKind(Enum):
    TRISECTION = "trisection"
    CLOSED = "closed"
    OPENBOOK = "openbook"
    LEFSCHETZ = "lefschetz"
    MORPHISM = "morphism"


Body = Union[RelativeTrisection, ClosedTrisection, OpenBook, LefschetzFibration, TriMorphism]

_KEYS = {
    DocumentKind.TRISECTION: ("kind", "surface_genus", "surface_boundary", "k", "boundary"),
    DocumentKind.CLOSED: ("kind", "g", "k"),
    DocumentKind.OPENBOOK: ("kind", "pages", "word"),
    DocumentKind.LEFSCHETZ: ("kind", "fiber_genus", "fiber_boundary", "cycles"),
    DocumentKind.MORPHISM: ("kind", "surface_genus", "surface_boundary", "k", "boundary", "source"),
}


@dataclass(frozen=True)
class TriDocument:
    kind: DocumentKind
    body: Body

    @classmethod
    def of(cls, body: Body) -> "TriDocument":
        """Wrap a value in the document kind that carries it."""
        if isinstance(body, TriMorphism):
            if isinstance(body.trisection, ClosedTrisection):
                return cls(DocumentKind.CLOSED, body.trisection)
            return cls(DocumentKind.MORPHISM, body)
        kinds = {
            RelativeTrisection: DocumentKind.TRISECTION,
            ClosedTrisection: DocumentKind.CLOSED,
            OpenBook: DocumentKind.OPENBOOK,
            LefschetzFibration: DocumentKind.LEFSCHETZ,
        }
        return cls(kinds[type(body)], body)


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------

def _object(value: Any, where: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError(where, "expected an object")
    return value


def _keys(data: Dict[str, Any], expected: Sequence[str], where: str) -> None:
    for key in expected:
        if key not in data:
            raise SchemaError(_join(where, key), "missing")
    for key in data:
        if key not in expected:
            raise SchemaError(_join(where, key), "unknown key")


def _join(where: str, key: str) -> str:
    return f"{where}.{key}" if where else key


def _int(data: Dict[str, Any], key: str, where: str, minimum: Optional[int] = None) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(_join(where, key), f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(_join(where, key), f"expected an integer >= {minimum}, got {value}")
    return value


def _list(data: Dict[str, Any], key: str, where: str) -> List[Any]:
    value = data[key]
    if not isinstance(value, list):
        raise SchemaError(_join(where, key), "expected a list")
    return value


def _sign(data: Dict[str, Any], where: str) -> int:
    sign = _int(data, "sign", where)
    if sign not in (1, -1):
        raise SchemaError(_join(where, "sign"), f"expected 1 or -1, got {sign}")
    return sign


def _curve(data: Dict[str, Any], surface: Surface, where: str) -> HomologyClass:
    values = _list(data, "curve", where)
    for index, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(f"{_join(where, 'curve')}[{index}]", f"expected an integer, got {value!r}")
    if len(values) != surface.h1_rank:
        raise SchemaError(
            _join(where, "curve"),
            f"length {len(values)} does not match H1 rank {surface.h1_rank} of {surface}",
        )
    return HomologyClass(tuple(values))


def _page(data: Dict[str, Any], where: str) -> Surface:
    return Surface(_int(data, "page_genus", where, 0), _int(data, "page_boundary", where, 0))


def _boundary_open_book(value: Any, where: str) -> OpenBook:
    data = _object(value, where)
    _keys(data, ("page_genus", "page_boundary", "word"), where)
    page = _page(data, where)
    letters = []
    for index, item in enumerate(_list(data, "word", where)):
        at = f"{where}.word[{index}]"
        letter = _object(item, at)
        _keys(letter, ("curve", "sign"), at)
        letters.append(TwistLetter(_curve(letter, page, at), 0, _sign(letter, at)))
    return OpenBook.single(page, letters)


def _relative(data: Dict[str, Any]) -> RelativeTrisection:
    boundary = tuple(
        _boundary_open_book(item, f"boundary[{index}]") for index, item in enumerate(_list(data, "boundary", ""))
    )
    return RelativeTrisection(
        _int(data, "surface_genus", ""),
        _int(data, "surface_boundary", ""),
        _int(data, "k", ""),
        boundary,
    )


def _open_book(data: Dict[str, Any]) -> OpenBook:
    pages = []
    for index, item in enumerate(_list(data, "pages", "")):
        at = f"pages[{index}]"
        page = _object(item, at)
        _keys(page, ("page_genus", "page_boundary"), at)
        pages.append(_page(page, at))
    letters = []
    for index, item in enumerate(_list(data, "word", "")):
        at = f"word[{index}]"
        letter = _object(item, at)
        _keys(letter, ("component", "curve", "sign"), at)
        component = _int(letter, "component", at, 0)
        if component >= len(pages):
            raise SchemaError(_join(at, "component"), f"no page {component}; document has {len(pages)}")
        letters.append(TwistLetter(_curve(letter, pages[component], at), component, _sign(letter, at)))
    return OpenBook(tuple(pages), tuple(letters))


def _lefschetz(data: Dict[str, Any]) -> LefschetzFibration:
    fiber = Surface(_int(data, "fiber_genus", "", 0), _int(data, "fiber_boundary", "", 0))
    cycles = []
    for index, item in enumerate(_list(data, "cycles", "")):
        at = f"cycles[{index}]"
        cycle = _object(item, at)
        _keys(cycle, ("curve", "sign"), at)
        cycles.append(VanishingCycle(_curve(cycle, fiber, at), _sign(cycle, at)))
    return LefschetzFibration(fiber, tuple(cycles))


def _morphism(data: Dict[str, Any]) -> TriMorphism:
    trisection = _relative(data)
    source = _list(data, "source", "")
    for index, value in enumerate(source):
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < trisection.m:
            raise SchemaError(f"source[{index}]", f"expected a boundary index below {trisection.m}, got {value!r}")
    if len(set(source)) != len(source):
        raise SchemaError("source", "repeated boundary index")
    return TriMorphism.from_source(trisection, source)


def parse(text: str) -> TriDocument:
    """
    Parse a document.

    Raises:
        DocumentSyntaxError: malformed JSON, with line and column
        SchemaError: well-formed JSON violating the schema, naming the key
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from None
    data = _object(data, "document")
    if "kind" not in data:
        raise SchemaError("kind", "missing")
    try:
        kind = DocumentKind(data["kind"])
    except (ValueError, TypeError):
        raise SchemaError("kind", f"unknown document kind {data['kind']!r}") from None
    _keys(data, _KEYS[kind], "")

    readers = {
        DocumentKind.TRISECTION: _relative,
        DocumentKind.CLOSED: lambda d: ClosedTrisection(_int(d, "g", ""), _int(d, "k", "")),
        DocumentKind.OPENBOOK: _open_book,
        DocumentKind.LEFSCHETZ: _lefschetz,
        DocumentKind.MORPHISM: _morphism,
    }
    return TriDocument(kind, readers[kind](data))


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------

def _letters(ob: OpenBook) -> List[Dict[str, Any]]:
    return [{"curve": letter.curve.to_list(), "sign": letter.sign} for letter in ob.word]


def _relative_data(T: RelativeTrisection, kind: DocumentKind) -> Dict[str, Any]:
    boundary = []
    for ob in T.boundary:
        page = ob.pages[0]
        boundary.append({"page_genus": page.genus, "page_boundary": page.boundary, "word": _letters(ob)})
    return {
        "kind": kind.value,
        "surface_genus": T.surface_genus,
        "surface_boundary": T.surface_boundary,
        "k": T.k,
        "boundary": boundary,
    }


def to_data(document: TriDocument) -> Dict[str, Any]:
    """Plain JSON value with keys in canonical order."""
    body = document.body
    if document.kind is DocumentKind.TRISECTION:
        return _relative_data(body, document.kind)
    if document.kind is DocumentKind.CLOSED:
        return {"kind": "closed", "g": body.g, "k": body.k}
    if document.kind is DocumentKind.OPENBOOK:
        return {
            "kind": "openbook",
            "pages": [{"page_genus": page.genus, "page_boundary": page.boundary} for page in body.pages],
            "word": [
                {"component": letter.component_index, "curve": letter.curve.to_list(), "sign": letter.sign}
                for letter in body.word
            ],
        }
    if document.kind is DocumentKind.LEFSCHETZ:
        return {
            "kind": "lefschetz",
            "fiber_genus": body.fiber.genus,
            "fiber_boundary": body.fiber.boundary,
            "cycles": [{"curve": cycle.curve.to_list(), "sign": cycle.chirality} for cycle in body.cycles],
        }
    data = _relative_data(body.trisection, document.kind)
    data["source"] = list(body.source)
    return data


def serialize(document: TriDocument) -> str:
    return json.dumps(to_data(document), indent=2) + "\n"
