"""Tests for the random arrangement generator."""

import pytest
from pydantic import ValidationError

from arrangement_lattice.errors import GenerationError
from arrangement_lattice.generator import GenSpec, random_arrangement
from arrangement_lattice.validation import validate


class TestGenSpec:
    """Tests for GenSpec validation."""

    def test_defaults(self) -> None:
        """Test default values."""
        request = GenSpec(n_lines=5)
        assert request.parallel_pairs == 0
        assert request.seed == 0
        assert request.coefficient_bound == 1000

    def test_too_many_pairs(self) -> None:
        """Test that 2p <= N is enforced."""
        with pytest.raises(ValidationError, match="2p <= N"):
            GenSpec(n_lines=5, parallel_pairs=3)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_lines": 2},
            {"n_lines": 5, "seed": -1},
            {"n_lines": 5, "seed": 2**64},
            {"n_lines": 5, "coefficient_bound": 0},
        ],
    )
    def test_out_of_range(self, kwargs: dict[str, int]) -> None:
        """Test the field bounds."""
        with pytest.raises(ValidationError):
            GenSpec(**kwargs)

    def test_frozen(self) -> None:
        """Test that specs are immutable."""
        request = GenSpec(n_lines=5)
        with pytest.raises(ValidationError):
            request.n_lines = 6  # type: ignore[misc]


class TestRandomArrangement:
    """Tests for random_arrangement()."""

    @pytest.mark.parametrize(("n_lines", "parallel_pairs"), [(3, 0), (5, 2), (6, 0), (6, 3), (9, 1)])
    def test_meets_spec(self, n_lines: int, parallel_pairs: int) -> None:
        """Test that the result is nodal with exactly p parallel pairs."""
        arr = random_arrangement(GenSpec(n_lines=n_lines, parallel_pairs=parallel_pairs, seed=42))
        report = validate(arr)
        assert arr.size == n_lines
        assert report.nodal
        assert report.parallel_pairs == parallel_pairs
        assert report.parallel_condition

    def test_deterministic(self) -> None:
        """Test that the same request gives the same arrangement."""
        request = GenSpec(n_lines=7, parallel_pairs=2, seed=123)
        assert random_arrangement(request) == random_arrangement(request)

    def test_seed_matters(self) -> None:
        """Test that different seeds give different arrangements."""
        first = random_arrangement(GenSpec(n_lines=6, seed=1))
        second = random_arrangement(GenSpec(n_lines=6, seed=2))
        assert first != second

    def test_coefficients_bounded(self) -> None:
        """Test that normalized coefficients respect the bound."""
        bound = 7
        arr = random_arrangement(GenSpec(n_lines=8, parallel_pairs=2, seed=9, coefficient_bound=bound))
        for line in arr:
            for value in (line.a, line.b, line.c):
                assert abs(value.numerator) <= bound
                assert value.denominator <= bound

    def test_exhausted_budget(self) -> None:
        """Test that an impossible request fails with a diagnostic."""
        request = GenSpec(n_lines=6, seed=0, coefficient_bound=1)
        with pytest.raises(GenerationError, match="after 50 attempts"):
            random_arrangement(request, retry_budget=50)
