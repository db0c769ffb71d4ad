"""
Gluing

Purpose: Gluing relative trisections along boundary open books and the
category of trisected cobordisms
"""

from .glue import GluePairing, glued_surface, paired_genus_oracle, glue
from .category import TriMorphism, source_objects, target_objects, compose, identity_trisection

__all__ = [
    'GluePairing',
    'glued_surface',
    'paired_genus_oracle',
    'glue',
    'TriMorphism',
    'source_objects',
    'target_objects',
    'compose',
    'identity_trisection',
]
