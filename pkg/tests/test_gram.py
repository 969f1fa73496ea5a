"""Tests for Gram matrix assembly and the flip base-change oracle."""

import pytest

from arrangement_lattice.analysis import run_flip_oracle
from arrangement_lattice.chambers import ChamberComplex, build
from arrangement_lattice.generator import GenSpec, random_arrangement
from arrangement_lattice.geometry.models import Arrangement
from arrangement_lattice.gram import (
    BasisElement,
    BasisIndex,
    BasisKind,
    GramMatrix,
    gram_entry,
    gram_matrix,
    gram_via_flip_oracle,
)
from arrangement_lattice.orientation import OrientationAssignment, all_assignments, random_assignments

TRIANGLE_GRAM = [
    [-2, -1, -1, -1],
    [-1, -2, 0, 0],
    [-1, 0, -2, 0],
    [-1, 0, 0, -2],
]


class TestBasis:
    """Tests for BasisIndex."""

    def test_order_and_labels(self, triangle_complex: ChamberComplex) -> None:
        """Test chambers first, then vertices."""
        basis = BasisIndex.for_complex(triangle_complex)
        assert basis.labels() == ["Sigma(C0)", "D(P0)", "D(P1)", "D(P2)"]
        assert basis.chamber_count == 1
        assert basis.position(BasisElement(BasisKind.VERTEX, 2)) == 3

    def test_size_mismatch(self, triangle_complex: ChamberComplex) -> None:
        """Test that rows must match the basis size."""
        with pytest.raises(ValueError, match="basis of size 4"):
            GramMatrix.from_rows([[-2]], BasisIndex.for_complex(triangle_complex))


class TestGramMatrix:
    """Tests for gram_matrix()."""

    def test_triangle(self, triangle_complex: ChamberComplex) -> None:
        """Test the Gram matrix of three generic lines."""
        gram = gram_matrix(triangle_complex, OrientationAssignment.standard(triangle_complex))
        assert gram.rows() == TRIANGLE_GRAM

    def test_triangle_flip_changes_nothing(self, triangle_complex: ChamberComplex) -> None:
        """Test that reversing the only cycle keeps every entry."""
        oa = OrientationAssignment.from_signs(triangle_complex, [-1])
        assert gram_matrix(triangle_complex, oa).rows() == TRIANGLE_GRAM

    def test_grid_entries(self, grid_complex: ChamberComplex) -> None:
        """Test chamber-chamber entries on the grid."""
        gram = gram_matrix(grid_complex, OrientationAssignment.standard(grid_complex))
        assert gram[0, 1] == gram[0, 2] == gram[1, 3] == gram[2, 3] == -1
        assert gram[0, 3] == gram[1, 2] == 0
        assert gram.diagonal() == [-2] * 13

    def test_grid_flip_breaks_coherence(self, grid_complex: ChamberComplex) -> None:
        """Test that flipping one diagonal square turns its point contact into -1."""
        gram = gram_matrix(grid_complex, OrientationAssignment.from_signs(grid_complex, [-1, 1, 1, 1]))
        assert gram[0, 3] == -1
        assert gram[1, 2] == 0
        assert gram[0, 1] == -1

    def test_chamber_vertex_entries(self, grid_complex: ChamberComplex) -> None:
        """Test that a square meets exactly the curves over its corners."""
        gram = gram_matrix(grid_complex, OrientationAssignment.standard(grid_complex))
        row = gram.rows()[0][4:]
        assert sorted(v for v, value in enumerate(row) if value == -1) == [0, 1, 3, 4]
        assert sum(row) == -4

    def test_symmetric(self, six_parallel: Arrangement) -> None:
        """Test symmetry and the -2 diagonal."""
        cc = build(six_parallel)
        gram = gram_matrix(cc, OrientationAssignment.standard(cc))
        assert gram.is_symmetric()
        assert set(gram.diagonal()) == {-2}
        assert gram.size == 7 + 12

    def test_gram_entry_without_precomputed_pairs(self, grid_complex: ChamberComplex) -> None:
        """Test that gram_entry classifies on demand."""
        oa = OrientationAssignment.standard(grid_complex)
        assert gram_entry(grid_complex, oa, BasisElement(BasisKind.CHAMBER, 0), BasisElement(BasisKind.CHAMBER, 3)) == 0
        assert gram_entry(grid_complex, oa, BasisElement(BasisKind.VERTEX, 4), BasisElement(BasisKind.CHAMBER, 3)) == -1
        assert gram_entry(grid_complex, oa, BasisElement(BasisKind.VERTEX, 4), BasisElement(BasisKind.VERTEX, 3)) == 0


class TestFlipOracle:
    """The flip base change must reproduce direct assembly."""

    def test_exhaustive_grid(self, grid_complex: ChamberComplex) -> None:
        """Test all 16 assignments of the grid."""
        standard = gram_matrix(grid_complex, OrientationAssignment.standard(grid_complex))
        for oa in all_assignments(grid_complex):
            assert gram_via_flip_oracle(grid_complex, standard, oa) == gram_matrix(grid_complex, oa)

    def test_random_six_lines(self, six_generic: Arrangement) -> None:
        """Test sampled assignments on six generic lines."""
        cc = build(six_generic)
        standard = gram_matrix(cc, OrientationAssignment.standard(cc))
        for oa in random_assignments(cc, 25, seed=11):
            assert gram_via_flip_oracle(cc, standard, oa) == gram_matrix(cc, oa)

    def test_run_flip_oracle_exhaustive(self, six_parallel: Arrangement) -> None:
        """Test the oracle runner on 2**7 assignments."""
        cc = build(six_parallel)
        standard = gram_matrix(cc, OrientationAssignment.standard(cc))
        result = run_flip_oracle(cc, standard, exhaustive_limit=10, samples=5)
        assert result.passed
        assert result.exhaustive
        assert result.assignments_checked == 2**7

    def test_run_flip_oracle_sampled(self, six_generic: Arrangement) -> None:
        """Test the sampled mode above the exhaustive limit."""
        cc = build(six_generic)
        standard = gram_matrix(cc, OrientationAssignment.standard(cc))
        result = run_flip_oracle(cc, standard, exhaustive_limit=3, samples=20, seed=5)
        assert result.passed
        assert not result.exhaustive
        assert result.assignments_checked == 20

    def test_run_flip_oracle_all_ten_chamber_assignments(self, six_generic: Arrangement) -> None:
        """Test every one of the 2**10 assignments of six generic lines."""
        cc = build(six_generic)
        assert len(cc.bounded_chamber_ids) == 10
        standard = gram_matrix(cc, OrientationAssignment.standard(cc))
        result = run_flip_oracle(cc, standard, exhaustive_limit=10, samples=0)
        assert result.exhaustive
        assert result.assignments_checked == 1024
        assert result.passed, result.mismatches

    @pytest.mark.slow
    def test_run_flip_oracle_thousand_samples(self) -> None:
        """Test 1000 random assignments on a generated eight-line arrangement."""
        cc = build(random_arrangement(GenSpec(n_lines=8, seed=8)))
        assert len(cc.bounded_chamber_ids) == 21
        standard = gram_matrix(cc, OrientationAssignment.standard(cc))
        result = run_flip_oracle(cc, standard, exhaustive_limit=10, samples=1000, seed=8)
        assert not result.exhaustive
        assert result.assignments_checked == 1000
        assert result.passed, result.mismatches
