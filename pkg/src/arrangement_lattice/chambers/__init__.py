"""Chamber complex of a nodal line arrangement."""

from arrangement_lattice.chambers.complex import build, classify_pair, locate, ngon_profile, touching_pairs
from arrangement_lattice.chambers.models import (
    Chamber,
    ChamberComplex,
    Disjoint,
    Edge,
    FrameStats,
    MeetAtPoint,
    PairClass,
    SharedEdge,
    Vertex,
)

__all__ = [
    "Chamber",
    "ChamberComplex",
    "Disjoint",
    "Edge",
    "FrameStats",
    "MeetAtPoint",
    "PairClass",
    "SharedEdge",
    "Vertex",
    "build",
    "classify_pair",
    "locate",
    "ngon_profile",
    "touching_pairs",
]
