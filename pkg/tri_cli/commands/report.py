"""
Report Commands - validate, euler, boundary, equiv

NO LOGIC - delegates to the calculator packages
"""

from typing import Any

from gluing import TriMorphism
from openbook import OpenBook
from trisection import ClosedTrisection, RelativeTrisection, boundary_open_books, checked_euler, stably_equivalent, validate

from ..adapters.document_adapter import read_bodies, read_body, write_document
from ..error_handler import EXIT_OK, EXIT_VIOLATION
from ..output import formatter

TRISECTION_KINDS = (RelativeTrisection, ClosedTrisection, TriMorphism)


def _trisection(path: str):
    body = read_body(path, TRISECTION_KINDS)
    return body.trisection if isinstance(body, TriMorphism) else body


def handle(args: Any) -> int:
    """Handle inspection commands."""
    handlers = {
        'validate': _handle_validate,
        'euler': _handle_euler,
        'boundary': _handle_boundary,
        'equiv': _handle_equiv,
    }
    return handlers[args.command](args)


def _handle_validate(args: Any) -> int:
    report = validate(_trisection(args.file))
    result = report.as_dict()
    result['violations'] = list(report.violations)
    formatter(args.output_format).print_report(result)
    return EXIT_OK if report.is_valid else EXIT_VIOLATION


def _handle_euler(args: Any) -> int:
    formatter(args.output_format).print_report({'chi': checked_euler(_trisection(args.file))})
    return EXIT_OK


def _handle_boundary(args: Any) -> int:
    """The boundary open books as one open book document, one page per component."""
    T = _trisection(args.file)
    if isinstance(T, ClosedTrisection):
        write_document(OpenBook(()))
        return EXIT_OK
    books = boundary_open_books(T)
    pages = tuple(ob.pages[0] for ob in books)
    word = tuple(letter.on_component(index) for index, ob in enumerate(books) for letter in ob.word)
    write_document(OpenBook(pages, word))
    return EXIT_OK


def _handle_equiv(args: Any) -> int:
    first, second = (
        body.trisection if isinstance(body, TriMorphism) else body
        for body in read_bodies([args.first, args.second], TRISECTION_KINDS)
    )
    equivalent = stably_equivalent(first, second)
    formatter(args.output_format).print_report({'stably_equivalent': equivalent})
    return EXIT_OK if equivalent else EXIT_VIOLATION
