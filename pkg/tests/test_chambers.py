"""Tests for the chamber complex."""

from fractions import Fraction

import pytest

from arrangement_lattice.chambers import (
    ChamberComplex,
    Disjoint,
    MeetAtPoint,
    SharedEdge,
    build,
    classify_pair,
    locate,
    ngon_profile,
    touching_pairs,
)
from arrangement_lattice.errors import NotNodalError
from arrangement_lattice.geometry.models import Arrangement, Point
from arrangement_lattice.infinity import counts

# Bounded chamber ids of the 3x3 grid, ordered by sign vector
BOTTOM_LEFT, TOP_LEFT, BOTTOM_RIGHT, TOP_RIGHT = 0, 1, 2, 3
CENTER = 4  # vertex id of the crossing of x = 1 and y = 1


class TestBuild:
    """Tests for build()."""

    def test_triangle(self, triangle_complex: ChamberComplex) -> None:
        """Test counts for three generic lines."""
        assert len(triangle_complex.vertices) == 3
        assert len(triangle_complex.edges) == 9
        assert triangle_complex.bounded_chamber_ids == (0,)
        assert len(triangle_complex.unbounded_chambers()) == 6
        (chamber,) = triangle_complex.bounded_chambers()
        assert chamber.vertices == frozenset({0, 1, 2})
        assert chamber.n_gon == 3
        assert len(chamber.boundary) == 3

    def test_vertex_ids_follow_line_pairs(self, triangle_complex: ChamberComplex) -> None:
        """Test that vertex ids enumerate pairs (i, j) with i < j."""
        assert [v.incident_lines for v in triangle_complex.vertices] == [(0, 1), (0, 2), (1, 2)]
        assert triangle_complex.vertices[0].point == Point(0, 0)

    def test_grid(self, grid_complex: ChamberComplex) -> None:
        """Test counts for the 3x3 grid of lines."""
        assert len(grid_complex.vertices) == 9
        assert len(grid_complex.edges) == 24
        assert len(grid_complex.bounded_chamber_ids) == 4
        assert len(grid_complex.chambers) == 16
        assert ngon_profile(grid_complex) == {4: 4}

    def test_bounded_chambers_come_first(self, grid_complex: ChamberComplex) -> None:
        """Test the chamber id order."""
        assert grid_complex.bounded_chamber_ids == (0, 1, 2, 3)
        assert all(not c.bounded for c in grid_complex.chambers[4:])

    def test_generic_counts(self, six_generic: Arrangement) -> None:
        """Test the bounded chamber and vertex counts of six generic lines."""
        cc = build(six_generic)
        assert (len(cc.bounded_chamber_ids), len(cc.vertices)) == counts(6, 0) == (10, 15)
        assert len(cc.chambers) - len(cc.bounded_chamber_ids) == 12
        assert len(cc.edges) == 6 + 2 * 15

    def test_parallel_counts(self, six_parallel: Arrangement) -> None:
        """Test counts with three parallel pairs."""
        cc = build(six_parallel)
        assert (len(cc.bounded_chamber_ids), len(cc.vertices)) == counts(6, 3) == (7, 12)
        assert ngon_profile(cc) == {3: 4, 4: 2, 5: 1}

    def test_euler_check(self, six_parallel: Arrangement, grid_complex: ChamberComplex) -> None:
        """Test the framed-graph bookkeeping."""
        assert build(six_parallel).euler_check()
        assert grid_complex.euler_check()

    def test_edges_sit_between_sides(self, grid_complex: ChamberComplex) -> None:
        """Test that the left chamber of an edge is on the negative side of its line."""
        for edge in grid_complex.edges:
            assert grid_complex.chamber(edge.left_chamber).sign_vector[edge.line_id] == -1
            assert grid_complex.chamber(edge.right_chamber).sign_vector[edge.line_id] == 1

    def test_interior_points(self, six_generic: Arrangement) -> None:
        """Test that every chamber's interior point locates back to it."""
        cc = build(six_generic)
        for chamber in cc.chambers:
            assert locate(cc, chamber.interior_point) == chamber.id

    def test_bounded_vertex_cycle(self, grid_complex: ChamberComplex) -> None:
        """Test that a unit square lists its four corners counterclockwise."""
        chamber = grid_complex.chamber(BOTTOM_LEFT)
        corners = [grid_complex.vertices[v].point for v in chamber.vertex_cycle]
        assert set(corners) == {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}
        area2 = sum(a.x * b.y - b.x * a.y for a, b in zip(corners, corners[1:] + corners[:1], strict=True))
        assert area2 == 2

    def test_not_nodal_raises(self, not_nodal: Arrangement) -> None:
        """Test that a triple point is refused."""
        with pytest.raises(NotNodalError):
            build(not_nodal)

    def test_two_lines(self) -> None:
        """Test that two crossing lines give four unbounded chambers."""
        cc = build(Arrangement.from_coefficients([(1, 0, 0), (0, 1, 0)]))
        assert cc.bounded_chamber_ids == ()
        assert len(cc.chambers) == 4
        assert all(not e.bounded for e in cc.edges)

    def test_parallel_lines_only(self) -> None:
        """Test two parallel lines: three strips and no vertices."""
        cc = build(Arrangement.from_coefficients([(0, 1, 0), (0, 1, -1)]))
        assert cc.vertices == ()
        assert len(cc.chambers) == 3
        assert all(e.endpoints == (None, None) for e in cc.edges)


class TestClassifyPair:
    """Tests for classify_pair and touching_pairs."""

    def test_shared_edge(self, grid_complex: ChamberComplex) -> None:
        """Test neighbours across y = 1."""
        pc = classify_pair(grid_complex, BOTTOM_LEFT, TOP_LEFT)
        assert isinstance(pc, SharedEdge)
        edge = grid_complex.edges[pc.edge]
        assert edge.line_id == 4
        assert set(edge.endpoints) == {1, CENTER}
        assert {edge.left_chamber, edge.right_chamber} == {BOTTOM_LEFT, TOP_LEFT}

    def test_meet_at_point(self, grid_complex: ChamberComplex) -> None:
        """Test diagonal squares meeting at the center."""
        assert classify_pair(grid_complex, BOTTOM_LEFT, TOP_RIGHT) == MeetAtPoint(vertex=CENTER)
        assert classify_pair(grid_complex, TOP_LEFT, BOTTOM_RIGHT) == MeetAtPoint(vertex=CENTER)

    def test_symmetric(self, grid_complex: ChamberComplex) -> None:
        """Test that the classification does not depend on argument order."""
        assert classify_pair(grid_complex, TOP_RIGHT, BOTTOM_LEFT) == classify_pair(
            grid_complex, BOTTOM_LEFT, TOP_RIGHT
        )

    def test_disjoint(self, six_generic: Arrangement) -> None:
        """Test that six generic lines have chamber pairs that do not touch."""
        cc = build(six_generic)
        pairs = touching_pairs(cc)
        ids = cc.bounded_chamber_ids
        disjoint = [(a, b) for a in ids for b in ids if a < b and (a, b) not in pairs]
        assert disjoint
        assert classify_pair(cc, *disjoint[0]) == Disjoint()

    def test_touching_pairs_grid(self, grid_complex: ChamberComplex) -> None:
        """Test that every pair of unit squares touches."""
        pairs = touching_pairs(grid_complex)
        assert len(pairs) == 6
        assert sum(isinstance(pc, SharedEdge) for pc in pairs.values()) == 4
        assert sum(isinstance(pc, MeetAtPoint) for pc in pairs.values()) == 2

    def test_chambers_at(self, grid_complex: ChamberComplex) -> None:
        """Test the bounded chambers around the center vertex."""
        assert grid_complex.chambers_at(CENTER) == (0, 1, 2, 3)
        assert grid_complex.chambers_at(0) == (BOTTOM_LEFT,)

    def test_same_chamber_rejected(self, grid_complex: ChamberComplex) -> None:
        """Test that a chamber is not classified against itself."""
        with pytest.raises(ValueError, match="itself"):
            classify_pair(grid_complex, 2, 2)

    def test_unbounded_rejected(self, grid_complex: ChamberComplex) -> None:
        """Test that unbounded chambers are refused."""
        with pytest.raises(ValueError, match="unbounded"):
            classify_pair(grid_complex, 0, 5)


class TestLocate:
    """Tests for locate()."""

    def test_inside_square(self, grid_complex: ChamberComplex) -> None:
        """Test locating the center of the top-right square."""
        assert locate(grid_complex, Point(Fraction(3, 2), Fraction(3, 2))) == TOP_RIGHT

    def test_on_line(self, grid_complex: ChamberComplex) -> None:
        """Test that a point on a line has no chamber."""
        assert locate(grid_complex, Point(1, Fraction(1, 2))) is None

    def test_far_away(self, grid_complex: ChamberComplex) -> None:
        """Test that a far point lands in an unbounded chamber."""
        cid = locate(grid_complex, Point(100, -100))
        assert cid is not None
        assert not grid_complex.chamber(cid).bounded
