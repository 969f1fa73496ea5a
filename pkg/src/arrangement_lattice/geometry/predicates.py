"""Exact incidence and side predicates."""

from __future__ import annotations

from fractions import Fraction

from arrangement_lattice.errors import DegeneratePairError
from arrangement_lattice.geometry.models import Line, Point


def intersect(l1: Line, l2: Line) -> Point | None:
    """Intersection point of two distinct lines.

    Args:
        l1: First line
        l2: Second line

    Returns:
        The crossing point, or None when the lines are parallel

    Raises:
        DegeneratePairError: If the two lines are the same locus

    Examples:
        >>> intersect(Line(1, 0, 0), Line(0, 1, 0))
        Point(x=Fraction(0, 1), y=Fraction(0, 1))
        >>> intersect(Line(0, 1, 0), Line(0, 1, -1)) is None
        True
    """
    if l1 == l2:
        raise DegeneratePairError()
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def side(line: Line, point: Point) -> int:
    """Sign of the line's linear form at ``point``: -1, 0 or +1."""
    value = line.evaluate(point)
    return (value > 0) - (value < 0)


def is_parallel(l1: Line, l2: Line) -> bool:
    """True for distinct lines with the same direction."""
    return l1 != l2 and l1.direction_class == l2.direction_class


def bounding_box(points: list[Point], margin: Fraction | None = None) -> tuple[Point, Point]:
    """Axis-aligned box strictly containing ``points``.

    The margin defaults to the larger side of the tight box, and at least 1,
    so every point sits well inside.

    Raises:
        ValueError: If ``points`` is empty
    """
    if not points:
        raise ValueError("bounding box of no points")
    xmin = min(p.x for p in points)
    xmax = max(p.x for p in points)
    ymin = min(p.y for p in points)
    ymax = max(p.y for p in points)
    if margin is None:
        margin = max(xmax - xmin, ymax - ymin, Fraction(1))
    return Point(xmin - margin, ymin - margin), Point(xmax + margin, ymax + margin)


def clip_line(line: Line, lo: Point, hi: Point) -> tuple[Point, Point]:
    """Clip a line to the box ``[lo, hi]``.

    The returned endpoints are ordered by increasing ``line.parameter``.

    Raises:
        ValueError: If the line misses the interior of the box
    """
    foot = line.foot_point()
    dx, dy = line.direction
    s_lo: Fraction | None = None
    s_hi: Fraction | None = None
    for origin, delta, low, high in ((foot.x, dx, lo.x, hi.x), (foot.y, dy, lo.y, hi.y)):
        if delta == 0:
            if not low < origin < high:
                raise ValueError(f"Line {line.id} misses the box")
            continue
        t1 = (low - origin) / delta
        t2 = (high - origin) / delta
        t1, t2 = min(t1, t2), max(t1, t2)
        s_lo = t1 if s_lo is None else max(s_lo, t1)
        s_hi = t2 if s_hi is None else min(s_hi, t2)
    if s_lo is None or s_hi is None or s_lo >= s_hi:
        raise ValueError(f"Line {line.id} misses the box")
    return line.point_at(s_lo), line.point_at(s_hi)
