"""
Test Suite

Purpose: Test suite for the trisection calculator
"""

from .test_utils import (
    page_book,
    hclass,
    relative,
    fibration,
    ball_morphism,
    parameters,
)

__all__ = [
    'page_book',
    'hclass',
    'relative',
    'fibration',
    'ball_morphism',
    'parameters',
]
