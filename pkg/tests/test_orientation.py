"""Tests for orientation assignments and coherence."""

import pytest

from arrangement_lattice.chambers.models import ChamberComplex, Disjoint, MeetAtPoint, SharedEdge
from arrangement_lattice.errors import CoherenceUndefinedError
from arrangement_lattice.orientation import (
    OrientationAssignment,
    all_assignments,
    chamber_sign,
    chamber_signs,
    coherent,
    is_coherent_collection,
    parse_orientation,
    random_assignments,
)


class TestOrientationAssignment:
    """Tests for OrientationAssignment."""

    def test_standard(self, grid_complex: ChamberComplex) -> None:
        """Test the all-standard assignment."""
        oa = OrientationAssignment.standard(grid_complex)
        assert oa.is_standard
        assert oa.signs() == [1, 1, 1, 1]

    def test_from_signs(self, grid_complex: ChamberComplex) -> None:
        """Test signs listed in chamber id order."""
        oa = OrientationAssignment.from_signs(grid_complex, [1, -1, 1, -1])
        assert oa.flipped == [1, 3]
        assert oa.sign(1) == -1

    def test_length_mismatch(self, grid_complex: ChamberComplex) -> None:
        """Test that the sign list must cover every bounded chamber."""
        with pytest.raises(ValueError, match="4 bounded chambers"):
            OrientationAssignment.from_signs(grid_complex, [1, -1])

    def test_bad_sign(self) -> None:
        """Test that signs other than +1 and -1 are refused."""
        with pytest.raises(ValueError, match="must be"):
            OrientationAssignment({0: 2})

    def test_check_total(self, grid_complex: ChamberComplex) -> None:
        """Test that an assignment over the wrong chambers is refused."""
        with pytest.raises(ValueError, match="exactly the bounded chambers"):
            OrientationAssignment({0: 1}).check_total(grid_complex)


class TestChamberSign:
    """Tests for the sign of the defining polynomial."""

    def test_triangle(self, triangle_complex: ChamberComplex) -> None:
        """Test that x * y * (x + y - 1) is negative inside the triangle."""
        (sign,) = chamber_signs(triangle_complex)
        assert (sign.chamber_id, sign.sign) == (0, -1)

    def test_grid_alternates(self, grid_complex: ChamberComplex) -> None:
        """Test the checkerboard pattern on the grid."""
        assert [s.sign for s in chamber_signs(grid_complex)] == [1, -1, -1, 1]

    def test_unbounded_refused(self, grid_complex: ChamberComplex) -> None:
        """Test that only bounded chambers carry a sign here."""
        with pytest.raises(ValueError, match="unbounded"):
            chamber_sign(grid_complex.arrangement, grid_complex.chamber(10))


class TestCoherence:
    """Tests for coherent() and is_coherent_collection()."""

    def test_coherent_rule(self) -> None:
        """Test that coherence means equal relative signs."""
        pc = MeetAtPoint(vertex=0)
        assert coherent(pc, 1, 1)
        assert coherent(pc, -1, -1)
        assert not coherent(pc, 1, -1)

    @pytest.mark.parametrize("pc", [Disjoint(), SharedEdge(edge=3)])
    def test_undefined(self, pc: Disjoint | SharedEdge) -> None:
        """Test that coherence needs a single shared vertex."""
        with pytest.raises(CoherenceUndefinedError, match="coherence undefined"):
            coherent(pc, 1, 1)

    def test_standard_is_coherent(self, grid_complex: ChamberComplex) -> None:
        """Test that the standard assignment is coherent."""
        assert is_coherent_collection(grid_complex, OrientationAssignment.standard(grid_complex))

    def test_single_flip_breaks_coherence(self, grid_complex: ChamberComplex) -> None:
        """Test flipping one of two diagonal squares."""
        oa = OrientationAssignment.from_signs(grid_complex, [-1, 1, 1, 1])
        assert not is_coherent_collection(grid_complex, oa)

    def test_diagonal_flip_stays_coherent(self, grid_complex: ChamberComplex) -> None:
        """Test flipping both squares of one diagonal."""
        oa = OrientationAssignment.from_signs(grid_complex, [-1, 1, 1, -1])
        assert is_coherent_collection(grid_complex, oa)


class TestEnumeration:
    """Tests for assignment enumeration and parsing."""

    def test_all_assignments(self, grid_complex: ChamberComplex) -> None:
        """Test that all 2**4 assignments appear, standard first."""
        assignments = list(all_assignments(grid_complex))
        assert len(assignments) == 16
        assert assignments[0].is_standard
        assert len({tuple(oa.signs()) for oa in assignments}) == 16

    def test_random_assignments_seeded(self, grid_complex: ChamberComplex) -> None:
        """Test that the same seed gives the same draws."""
        first = [oa.signs() for oa in random_assignments(grid_complex, 5, seed=3)]
        second = [oa.signs() for oa in random_assignments(grid_complex, 5, seed=3)]
        assert first == second
        assert len(first) == 5

    @pytest.mark.parametrize(
        ("text", "flipped"),
        [
            ("standard", []),
            ("+,-,+,-", [1, 3]),
            ("1, -1, -1, 1", [1, 2]),
            ("-,+1,+,-1", [0, 3]),
        ],
    )
    def test_parse(self, grid_complex: ChamberComplex, text: str, flipped: list[int]) -> None:
        """Test the accepted sign-list spellings."""
        assert parse_orientation(grid_complex, text).flipped == flipped

    def test_parse_unknown_token(self, grid_complex: ChamberComplex) -> None:
        """Test that unknown tokens are named."""
        with pytest.raises(ValueError, match="unknown orientation signs"):
            parse_orientation(grid_complex, "+,x,+,+")

    def test_parse_wrong_length(self, grid_complex: ChamberComplex) -> None:
        """Test a sign list of the wrong length."""
        with pytest.raises(ValueError, match="sign list has 2 entries"):
            parse_orientation(grid_complex, "+,-")
