"""
Document Adapter - Bridge CLI to document files

Reads UTF-8 files into typed values; writes canonical documents to stdout
"""

import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO, Tuple, Type

from core import DocumentError, SchemaError

from ..document import Body, TriDocument, parse, serialize


def read_document(path: str) -> TriDocument:
    """Read and parse a document file ('-' reads standard input)."""
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            text = Path(path).read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    return parse(text)


def read_body(path: str, accepted: Sequence[Type]) -> Body:
    """Read a document whose body must be one of the accepted types."""
    document = read_document(path)
    if not isinstance(document.body, tuple(accepted)):
        names = ", ".join(t.__name__ for t in accepted)
        raise SchemaError("kind", f"{path} holds a {document.kind.value} document; expected one of {names}")
    return document.body


def read_bodies(paths: Sequence[str], accepted: Sequence[Type]) -> Tuple[Body, ...]:
    return tuple(read_body(path, accepted) for path in paths)


def write_document(body: Body, stream: Optional[TextIO] = None) -> None:
    """Write `body` as a canonical document."""
    (stream or sys.stdout).write(serialize(TriDocument.of(body)))
