"""Exact rational plane geometry: points, lines, arrangements and predicates."""

from arrangement_lattice.geometry.models import Arrangement, Line, Point, Rat, to_rat
from arrangement_lattice.geometry.predicates import bounding_box, clip_line, intersect, is_parallel, side

__all__ = [
    "Arrangement",
    "Line",
    "Point",
    "Rat",
    "bounding_box",
    "clip_line",
    "intersect",
    "is_parallel",
    "side",
    "to_rat",
]
