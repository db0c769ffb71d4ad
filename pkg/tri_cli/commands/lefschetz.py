"""
Lefschetz Commands - from-lefschetz, wrinkle, h1

NO LOGIC - delegates to the calculator packages
"""

from typing import Any

from lefschetz import LefschetzFibration, fourmanifold_h1, lf_to_trisection, wrinkle

from ..adapters.document_adapter import read_body, write_document
from ..error_handler import EXIT_OK
from ..output import formatter


def handle(args: Any) -> int:
    """Handle Lefschetz commands."""
    handlers = {
        'from-lefschetz': _handle_from_lefschetz,
        'wrinkle': _handle_wrinkle,
        'h1': _handle_h1,
    }
    return handlers[args.command](args)


def _handle_from_lefschetz(args: Any) -> int:
    L = read_body(args.file, (LefschetzFibration,))
    write_document(lf_to_trisection(L, args.crossings))
    return EXIT_OK


def _handle_wrinkle(args: Any) -> int:
    L = read_body(args.file, (LefschetzFibration,))
    record = wrinkle(L)
    formatter(args.output_format).print_report({
        'fiber_genus': record.fiber.genus,
        'fiber_boundary': record.fiber.boundary,
        'cuspoids': record.cuspoids,
        'central_genus': record.central_genus,
        'lefschetz_remaining': len(record.lefschetz_remaining),
    })
    return EXIT_OK


def _handle_h1(args: Any) -> int:
    L = read_body(args.file, (LefschetzFibration,))
    group = fourmanifold_h1(L)
    formatter(args.output_format).print_report({
        'h1': str(group),
        'invariants': group.invariants(),
    })
    return EXIT_OK
