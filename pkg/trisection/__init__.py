"""
Trisections

Purpose: Relative and closed trisection parameters, validation, Euler
characteristics, stabilizations, connected sum, stable equivalence
"""

from .model import RelativeTrisection, ClosedTrisection, DerivedReport
from .validation import Trisection, validate, require_valid, euler, euler_oracle, checked_euler
from .moves import (
    boundary_open_books,
    interior_stabilize,
    relative_stabilize,
    connected_sum,
    stably_equivalent,
    closed_trisection_for_euler,
)
from .standard import ball_trisection, sphere_cross_interval, sphere_trisection

__all__ = [
    'RelativeTrisection',
    'ClosedTrisection',
    'DerivedReport',
    'Trisection',
    'validate',
    'require_valid',
    'euler',
    'euler_oracle',
    'checked_euler',
    'boundary_open_books',
    'interior_stabilize',
    'relative_stabilize',
    'connected_sum',
    'stably_equivalent',
    'closed_trisection_for_euler',
    'ball_trisection',
    'sphere_cross_interval',
    'sphere_trisection',
]
