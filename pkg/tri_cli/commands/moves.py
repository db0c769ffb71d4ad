"""
Move Commands - stabilize, sum, closed

NO LOGIC - delegates to the calculator packages
"""

from typing import Any

from core import StabilizationError
from gluing import TriMorphism
from lefschetz import LefschetzFibration, stabilize_lefschetz
from openbook import OpenBook, StabilizationVariant, hopf_stabilize
from trisection import (
    ClosedTrisection,
    RelativeTrisection,
    closed_trisection_for_euler,
    connected_sum,
    interior_stabilize,
    relative_stabilize,
)

from ..adapters.document_adapter import read_bodies, read_body, write_document
from ..error_handler import EXIT_OK


def handle(args: Any) -> int:
    """Handle move commands."""
    handlers = {
        'stabilize': _handle_stabilize,
        'sum': _handle_sum,
        'closed': _handle_closed,
    }
    return handlers[args.command](args)


def _sign(flag: str) -> int:
    return {'+': 1, '-': -1}[flag]


def _handle_stabilize(args: Any) -> int:
    body = read_body(args.file, (RelativeTrisection, ClosedTrisection, TriMorphism, OpenBook, LefschetzFibration))
    if isinstance(body, TriMorphism):
        body = body.trisection

    if args.interior:
        if not isinstance(body, (RelativeTrisection, ClosedTrisection)):
            raise StabilizationError("--interior applies to trisection documents only")
        write_document(interior_stabilize(body))
        return EXIT_OK

    variant = StabilizationVariant.from_flag(args.variant)
    sign = _sign(args.sign)
    if isinstance(body, RelativeTrisection):
        write_document(relative_stabilize(body, args.relative, variant, sign))
    elif isinstance(body, OpenBook):
        body.require_valid()
        write_document(hopf_stabilize(body, args.relative, variant, sign))
    elif isinstance(body, LefschetzFibration):
        if args.relative != 0:
            raise StabilizationError(f"a Lefschetz fibration has one boundary component, got index {args.relative}")
        write_document(stabilize_lefschetz(body, variant, sign))
    else:
        raise StabilizationError("a closed trisection has no boundary to stabilize relative to")
    return EXIT_OK


def _handle_sum(args: Any) -> int:
    first, second = (
        body.trisection if isinstance(body, TriMorphism) else body
        for body in read_bodies([args.first, args.second], (RelativeTrisection, ClosedTrisection, TriMorphism))
    )
    write_document(connected_sum(first, second))
    return EXIT_OK


def _handle_closed(args: Any) -> int:
    write_document(closed_trisection_for_euler(args.euler, args.genus))
    return EXIT_OK
