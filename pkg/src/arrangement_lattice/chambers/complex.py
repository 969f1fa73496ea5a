"""Construction and queries of the chamber complex.

The complex is built on a framed planar graph: every line is clipped to a
box that strictly contains all crossing points, the box boundary is added as
extra edges, and faces are traced with a half-edge structure whose vertex
stars are sorted by exact angle. The outer face of the framed graph is
dropped; the remaining faces are the chambers. A face is bounded exactly
when every edge along it runs between two crossing points.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, pairwise
from typing import TYPE_CHECKING

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
from arrangement_lattice.errors import ArrangementLatticeError
from arrangement_lattice.geometry.models import Point
from arrangement_lattice.geometry.predicates import bounding_box, clip_line, intersect, side
from arrangement_lattice.validation.engine import require_buildable, validate

if TYPE_CHECKING:
    from arrangement_lattice.geometry.models import Arrangement

logger = logging.getLogger(__name__)

Direction = tuple[Fraction, Fraction]


def _half_plane(d: Direction) -> int:
    """0 for angles in [0, pi), 1 for [pi, 2*pi)."""
    dx, dy = d
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _compare_directions(d1: Direction, d2: Direction) -> int:
    """Counterclockwise angular order starting from the positive x axis."""
    h1, h2 = _half_plane(d1), _half_plane(d2)
    if h1 != h2:
        return h1 - h2
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


_direction_key = cmp_to_key(_compare_directions)


def _frame_sides(points: list[Point], frame_ids: list[int], lo: Point, hi: Point) -> list[list[int]]:
    """Frame vertex ids on each side of the box, ordered along the side."""
    bottom = sorted((i for i in frame_ids if points[i].y == lo.y), key=lambda i: points[i].x)
    top = sorted((i for i in frame_ids if points[i].y == hi.y), key=lambda i: points[i].x)
    left = sorted((i for i in frame_ids if points[i].x == lo.x), key=lambda i: points[i].y)
    right = sorted((i for i in frame_ids if points[i].x == hi.x), key=lambda i: points[i].y)
    return [bottom, right, top, left]


def build(arr: Arrangement) -> ChamberComplex:
    """Build the chamber complex of a nodal arrangement.

    Args:
        arr: Arrangement with at least two lines, no triple point and no repeated line

    Returns:
        ChamberComplex listing every vertex, edge and chamber

    Raises:
        NotNodalError: If the arrangement has a triple point or a repeated line
        ValueError: If it has fewer than two lines
    """
    require_buildable(validate(arr))
    lines = arr.lines

    vertices: list[Vertex] = []
    on_line: list[list[int]] = [[] for _ in lines]
    for i, j in combinations(range(len(lines)), 2):
        point = intersect(lines[i], lines[j])
        if point is None:
            continue
        vid = len(vertices)
        vertices.append(Vertex(id=vid, point=point, incident_lines=(i, j)))
        on_line[i].append(vid)
        on_line[j].append(vid)
    n_vertices = len(vertices)

    anchors = [v.point for v in vertices] + [line.foot_point() for line in lines]
    lo, hi = bounding_box(anchors)

    points: list[Point] = [v.point for v in vertices]
    frame_index: dict[Point, int] = {}

    def frame_vertex(p: Point) -> int:
        if p not in frame_index:
            frame_index[p] = len(points)
            points.append(p)
        return frame_index[p]

    for corner in (lo, Point(hi.x, lo.y), hi, Point(lo.x, hi.y)):
        frame_vertex(corner)

    # (start, end, carrier line or None for the frame)
    segments: list[tuple[int, int, int | None]] = []
    for line in lines:
        start, end = clip_line(line, lo, hi)
        along = {vid: line.parameter(vertices[vid].point) for vid in on_line[line.id]}
        chain = sorted(along, key=along.__getitem__)
        path = [frame_vertex(start), *chain, frame_vertex(end)]
        segments.extend((u, w, line.id) for u, w in pairwise(path))
    n_line_segments = len(segments)
    for side_ids in _frame_sides(points, list(frame_index.values()), lo, hi):
        segments.extend((u, w, None) for u, w in pairwise(side_ids))

    n_half = 2 * len(segments)
    origin = [0] * n_half
    for k, (u, w, _) in enumerate(segments):
        origin[2 * k] = u
        origin[2 * k + 1] = w

    def direction(h: int) -> Direction:
        a, b = points[origin[h]], points[origin[h ^ 1]]
        return (b.x - a.x, b.y - a.y)

    star: list[list[int]] = [[] for _ in points]
    for h in range(n_half):
        star[origin[h]].append(h)
    position = [0] * n_half
    for outgoing in star:
        outgoing.sort(key=lambda h: _direction_key(direction(h)))
        for idx, h in enumerate(outgoing):
            position[h] = idx

    def next_half_edge(h: int) -> int:
        twin = h ^ 1
        around = star[origin[twin]]
        return around[(position[twin] - 1) % len(around)]

    face_of = [-1] * n_half
    cycles: list[list[int]] = []
    for h0 in range(n_half):
        if face_of[h0] != -1:
            continue
        cycle: list[int] = []
        h = h0
        while face_of[h] == -1:
            face_of[h] = len(cycles)
            cycle.append(h)
            h = next_half_edge(h)
        if h != h0:
            raise ArrangementLatticeError(f"face traversal from half-edge {h0} did not close")
        cycles.append(cycle)

    def signed_area2(cycle: list[int]) -> Fraction:
        total = Fraction(0)
        for h in cycle:
            a, b = points[origin[h]], points[origin[h ^ 1]]
            total += a.x * b.y - b.x * a.y
        return total

    outer = [idx for idx, cycle in enumerate(cycles) if signed_area2(cycle) < 0]
    if len(outer) != 1:
        raise ArrangementLatticeError(f"expected one outer face, found {len(outer)}")

    faces: list[tuple[bool, tuple[int, ...], int, Point]] = []
    for idx, cycle in enumerate(cycles):
        if idx == outer[0]:
            continue
        bounded = all(
            segments[h // 2][2] is not None and origin[h] < n_vertices and origin[h ^ 1] < n_vertices for h in cycle
        )
        corners = [points[origin[h]] for h in cycle]
        interior = Point(sum(p.x for p in corners) / len(corners), sum(p.y for p in corners) / len(corners))
        signs = tuple(side(line, interior) for line in lines)
        if 0 in signs:
            raise ArrangementLatticeError(f"interior point {interior} of face {idx} lies on a line")
        faces.append((bounded, signs, idx, interior))

    faces.sort(key=lambda f: (not f[0], f[1]))
    chamber_of_cycle = {cycle_idx: cid for cid, (_, _, cycle_idx, _) in enumerate(faces)}

    edges = [
        Edge(
            id=k,
            line_id=line_id,
            endpoints=(u if u < n_vertices else None, w if w < n_vertices else None),
            left_chamber=chamber_of_cycle[face_of[2 * k]],
            right_chamber=chamber_of_cycle[face_of[2 * k + 1]],
        )
        for k, (u, w, line_id) in enumerate(segments[:n_line_segments])
        if line_id is not None
    ]

    chambers: list[Chamber] = []
    vertex_chambers: dict[int, list[int]] = defaultdict(list)
    for cid, (bounded, signs, cycle_idx, interior) in enumerate(faces):
        cycle = cycles[cycle_idx]
        vertex_cycle = tuple(origin[h] for h in cycle if origin[h] < n_vertices)
        chambers.append(
            Chamber(
                id=cid,
                bounded=bounded,
                sign_vector=signs,
                vertices=frozenset(vertex_cycle),
                boundary=tuple(h // 2 for h in cycle if h // 2 < n_line_segments),
                interior_point=interior,
                vertex_cycle=vertex_cycle,
            )
        )
        if bounded:
            for vid in vertex_cycle:
                vertex_chambers[vid].append(cid)

    bounded_ids = tuple(c.id for c in chambers if c.bounded)
    frame = FrameStats(
        graph_vertices=len(points),
        graph_edges=len(segments),
        faces=len(cycles),
        half_edges=n_half,
        half_edges_used=sum(len(cycle) for cycle in cycles),
        lo=lo,
        hi=hi,
    )
    cc = ChamberComplex(
        arrangement=arr,
        vertices=tuple(vertices),
        edges=tuple(edges),
        chambers=tuple(chambers),
        bounded_chamber_ids=bounded_ids,
        frame=frame,
        _vertex_chambers={vid: tuple(ids) for vid, ids in vertex_chambers.items()},
    )
    logger.info(
        f"Built chamber complex: {len(bounded_ids)} bounded chambers, "
        f"{len(chambers) - len(bounded_ids)} unbounded, {n_vertices} vertices, {len(edges)} edges"
    )
    return cc


def _bounded_chamber(cc: ChamberComplex, chamber_id: int) -> Chamber:
    if not 0 <= chamber_id < len(cc.chambers):
        raise ValueError(f"no chamber with id {chamber_id}")
    chamber = cc.chamber(chamber_id)
    if not chamber.bounded:
        raise ValueError(f"chamber {chamber_id} is unbounded")
    return chamber


def classify_pair(cc: ChamberComplex, c1: int, c2: int) -> PairClass:
    """Classify how the closures of two bounded chambers meet.

    Decided from shared edge and vertex sets; convexity makes the three cases
    exhaustive.

    Args:
        cc: Chamber complex
        c1: First bounded chamber id
        c2: Second bounded chamber id, different from ``c1``

    Returns:
        SharedEdge, MeetAtPoint or Disjoint

    Raises:
        ValueError: If the ids are equal, unknown or name an unbounded chamber
    """
    if c1 == c2:
        raise ValueError(f"cannot classify chamber {c1} against itself")
    first, second = _bounded_chamber(cc, c1), _bounded_chamber(cc, c2)
    shared_edges = set(first.boundary) & set(second.boundary)
    shared_vertices = first.vertices & second.vertices
    if shared_edges:
        if len(shared_vertices) != 2:
            raise ArrangementLatticeError(
                f"chambers {c1} and {c2} share an edge but {len(shared_vertices)} vertices"
            )
        return SharedEdge(edge=min(shared_edges))
    if len(shared_vertices) == 1:
        return MeetAtPoint(vertex=next(iter(shared_vertices)))
    if not shared_vertices:
        return Disjoint()
    raise ArrangementLatticeError(f"chambers {c1} and {c2} share {len(shared_vertices)} vertices but no edge")


def touching_pairs(cc: ChamberComplex) -> dict[tuple[int, int], PairClass]:
    """Classification of every pair of bounded chambers whose closures meet.

    Pairs absent from the result are Disjoint.
    """
    pairs: dict[tuple[int, int], PairClass] = {}
    for vid in range(len(cc.vertices)):
        for c1, c2 in combinations(sorted(cc.chambers_at(vid)), 2):
            if (c1, c2) not in pairs:
                pairs[(c1, c2)] = classify_pair(cc, c1, c2)
    return pairs


def ngon_profile(cc: ChamberComplex) -> dict[int, int]:
    """Number of bounded n-gons for each n, sorted by n."""
    counts = Counter(c.n_gon for c in cc.bounded_chambers())
    return dict(sorted(counts.items()))


def locate(cc: ChamberComplex, point: Point) -> int | None:
    """Id of the chamber whose interior contains ``point``, or None on a line."""
    signs = tuple(side(line, point) for line in cc.arrangement)
    if 0 in signs:
        return None
    for chamber in cc.chambers:
        if chamber.sign_vector == signs:
            return chamber.id
    raise ArrangementLatticeError(f"no chamber realizes the sign vector of {point}")
