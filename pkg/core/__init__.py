"""
Core

Purpose: Exact integer linear algebra, canonical surfaces, Euler characteristics
"""

from .errors import (
    TrisectionCalcError,
    InvalidSurfaceError,
    HomologyMismatchError,
    InvalidOpenBookError,
    StabilizationError,
    InvalidTrisectionError,
    IncompatibleOpenBooksError,
    GluingError,
    OracleMismatchError,
    InvalidFibrationError,
    DocumentError,
    DocumentSyntaxError,
    SchemaError,
)
from .intmatrix import IntMatrix
from .smith import SmithForm, AbelianGroup, smith_normal_form, cokernel
from .surface import Surface, HomologyClass, surface_euler, intersection_form

__all__ = [
    'TrisectionCalcError',
    'InvalidSurfaceError',
    'HomologyMismatchError',
    'InvalidOpenBookError',
    'StabilizationError',
    'InvalidTrisectionError',
    'IncompatibleOpenBooksError',
    'GluingError',
    'OracleMismatchError',
    'InvalidFibrationError',
    'DocumentError',
    'DocumentSyntaxError',
    'SchemaError',
    'IntMatrix',
    'SmithForm',
    'AbelianGroup',
    'smith_normal_form',
    'cokernel',
    'Surface',
    'HomologyClass',
    'surface_euler',
    'intersection_form',
]
