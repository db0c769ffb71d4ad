"""
Open Books

Purpose: Abstract open book decompositions with homology-level monodromy
"""

from .stabilization import StabilizationVariant, stabilized_page, embed_class, stabilizing_class
from .twist import TwistLetter, transvection_matrix
from .open_book import OpenBook, monodromy_action, hopf_stabilize, compatible, equivalent

__all__ = [
    'StabilizationVariant',
    'stabilized_page',
    'embed_class',
    'stabilizing_class',
    'TwistLetter',
    'transvection_matrix',
    'OpenBook',
    'monodromy_action',
    'hopf_stabilize',
    'compatible',
    'equivalent',
]
