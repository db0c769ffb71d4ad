"""
Gluing Commands - glue, compose, identity

NO LOGIC - delegates to the calculator packages
"""

from functools import reduce
from typing import Any

from core import GluingError, Surface
from gluing import GluePairing, TriMorphism, compose, glue, identity_trisection
from openbook import OpenBook
from trisection import RelativeTrisection

from ..adapters.document_adapter import read_bodies, write_document
from ..error_handler import EXIT_OK


def handle(args: Any) -> int:
    """Handle gluing commands."""
    handlers = {
        'glue': _handle_glue,
        'compose': _handle_compose,
        'identity': _handle_identity,
    }
    return handlers[args.command](args)


def _handle_glue(args: Any) -> int:
    first, second = (
        body.trisection if isinstance(body, TriMorphism) else body
        for body in read_bodies([args.first, args.second], (RelativeTrisection, TriMorphism))
    )
    write_document(glue(first, second, GluePairing.parse(args.pair), force=args.force))
    return EXIT_OK


def _handle_compose(args: Any) -> int:
    if len(args.files) < 2:
        raise GluingError("compose needs at least two morphism documents")
    morphisms = read_bodies(args.files, (TriMorphism,))
    write_document(reduce(compose, morphisms))
    return EXIT_OK


def _handle_identity(args: Any) -> int:
    write_document(identity_trisection(OpenBook.single(Surface(args.page_genus, args.page_boundary))))
    return EXIT_OK
