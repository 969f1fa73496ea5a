"""Data model of the chamber complex.

Attributes of the planar subdivision induced by a nodal arrangement: the
crossing points (vertices), the pieces of lines between consecutive
crossings (edges) and the closures of the complementary regions (chambers).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from arrangement_lattice.geometry.models import Arrangement, Point  # noqa: TC001 - dataclass field types


@dataclass(frozen=True)
class Vertex:
    """A crossing point of exactly two lines.

    Attributes:
        id: Vertex id; ids follow the order of the line pair ``(i, j)``, ``i < j``
        point: Location of the crossing
        incident_lines: The two line ids, ascending
    """

    id: int
    point: Point
    incident_lines: tuple[int, int]


@dataclass(frozen=True)
class Edge:
    """A piece of a line between consecutive vertices.

    An endpoint is ``None`` where the edge runs off to infinity, so rays have
    one ``None`` and a line without crossings has two.

    Attributes:
        id: Edge id; ids follow (line id, position along the line)
        line_id: Carrier line
        endpoints: Vertex ids in increasing order along the line
        left_chamber: Chamber on the left when walking along the line direction
        right_chamber: Chamber on the right
    """

    id: int
    line_id: int
    endpoints: tuple[int | None, int | None]
    left_chamber: int
    right_chamber: int

    @property
    def bounded(self) -> bool:
        return self.endpoints[0] is not None and self.endpoints[1] is not None


@dataclass(frozen=True)
class Chamber:
    """Closure of a connected component of the complement of the lines.

    Attributes:
        id: Chamber id; bounded chambers come first, each group ordered by sign vector
        bounded: Whether the chamber is a bounded polygon
        sign_vector: Sign of every line's linear form at ``interior_point``
        vertices: Arrangement vertices on the chamber's boundary
        boundary: Edge ids in counterclockwise order
        interior_point: A point of the open chamber
        vertex_cycle: Vertex ids in counterclockwise order
    """

    id: int
    bounded: bool
    sign_vector: tuple[int, ...]
    vertices: frozenset[int]
    boundary: tuple[int, ...]
    interior_point: Point
    vertex_cycle: tuple[int, ...] = ()

    @property
    def n_gon(self) -> int:
        """Number of corners of a bounded chamber."""
        return len(self.vertices)


@dataclass(frozen=True)
class Disjoint:
    """The two closures do not meet."""


@dataclass(frozen=True)
class MeetAtPoint:
    """The two closures meet in exactly one vertex."""

    vertex: int


@dataclass(frozen=True)
class SharedEdge:
    """The two closures share an edge."""

    edge: int


PairClass = Disjoint | MeetAtPoint | SharedEdge


@dataclass(frozen=True)
class FrameStats:
    """Sizes of the framed planar graph the complex was traversed on.

    The frame is the boundary of a box containing every vertex; its corners
    and the points where lines leave the box are extra graph vertices.
    """

    graph_vertices: int
    graph_edges: int
    faces: int
    half_edges: int
    half_edges_used: int
    lo: Point
    hi: Point


@dataclass(frozen=True)
class ChamberComplex:
    """The planar subdivision of a nodal arrangement.

    Attributes:
        arrangement: Source arrangement
        vertices: Crossing points, indexed by id
        edges: Arrangement edges, indexed by id
        chambers: All chambers, bounded first, indexed by id
        bounded_chamber_ids: Ids of the bounded chambers, ascending
        frame: Bookkeeping of the framed graph
    """

    arrangement: Arrangement
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    chambers: tuple[Chamber, ...]
    bounded_chamber_ids: tuple[int, ...]
    frame: FrameStats
    _vertex_chambers: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False, compare=False)

    def chamber(self, chamber_id: int) -> Chamber:
        return self.chambers[chamber_id]

    def bounded_chambers(self) -> list[Chamber]:
        return [self.chambers[i] for i in self.bounded_chamber_ids]

    def unbounded_chambers(self) -> list[Chamber]:
        return [c for c in self.chambers if not c.bounded]

    def chambers_at(self, vertex_id: int) -> tuple[int, ...]:
        """Bounded chambers having ``vertex_id`` as a corner."""
        return self._vertex_chambers.get(vertex_id, ())

    def euler_check(self) -> bool:
        """V - E + F = 2 on the framed graph, and every half-edge bounds one face."""
        f = self.frame
        return (
            f.graph_vertices - f.graph_edges + f.faces == 2
            and f.half_edges == 2 * f.graph_edges
            and f.half_edges_used == f.half_edges
        )
