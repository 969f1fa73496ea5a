"""Tests for reading and writing arrangement files."""

from fractions import Fraction
from pathlib import Path

import pytest

from arrangement_lattice.errors import ArrangementParseError
from arrangement_lattice.geometry.models import Arrangement
from arrangement_lattice.io import (
    parse_arrangement,
    parse_rational,
    read_arrangement,
    serialize_arrangement,
    write_arrangement,
)

DATA_DIR_VALID = Path(__file__).parent / "data" / "valid"
DATA_DIR_INVALID = Path(__file__).parent / "data" / "invalid"

VALID_FILES = sorted(DATA_DIR_VALID.glob("*.txt"))


class TestParseRational:
    """Tests for parse_rational()."""

    @pytest.mark.parametrize(
        ("token", "value"),
        [("3", Fraction(3)), ("-7", Fraction(-7)), ("+2/4", Fraction(1, 2)), ("-1/3", Fraction(-1, 3))],
    )
    def test_valid(self, token: str, value: Fraction) -> None:
        """Test accepted spellings."""
        assert parse_rational(token) == value

    @pytest.mark.parametrize("token", ["1.5", "1/-2", "a", "1//2", "/3"])
    def test_malformed(self, token: str) -> None:
        """Test rejected spellings."""
        with pytest.raises(ArrangementParseError, match="malformed rational"):
            parse_rational(token)

    def test_zero_denominator(self) -> None:
        """Test that p/0 is named as such."""
        with pytest.raises(ArrangementParseError, match="zero denominator"):
            parse_rational("1/0", 4, 9)


class TestParseArrangement:
    """Tests for parse_arrangement()."""

    def test_comments_and_blank_lines(self) -> None:
        """Test that comments and blank lines are skipped."""
        arr = parse_arrangement("# header\n\n1 0 0  # x = 0\n0 1 0\n\n1 1 -1\n")
        assert arr == Arrangement.from_coefficients([(1, 0, 0), (0, 1, 0), (1, 1, -1)])

    def test_normalizes(self) -> None:
        """Test that coefficients are normalized on parse."""
        arr = parse_arrangement("2 4 -6\n0 -3 3/2\n")
        assert (arr[0].a, arr[0].b, arr[0].c) == (1, 2, -3)
        assert (arr[1].a, arr[1].b, arr[1].c) == (0, 1, Fraction(-1, 2))

    def test_location_of_bad_token(self) -> None:
        """Test line and column reporting."""
        with pytest.raises(ArrangementParseError) as exc_info:
            parse_arrangement((DATA_DIR_INVALID / "bad_rational.txt").read_text())
        assert exc_info.value.line == 2
        assert exc_info.value.column == 5
        assert exc_info.value.token == "1/0"
        assert str(exc_info.value).startswith("line 2, column 5: zero denominator")

    def test_too_many_tokens(self) -> None:
        """Test that a fourth token is pointed at."""
        with pytest.raises(ArrangementParseError, match="expected 3 rationals, found 4") as exc_info:
            read_arrangement(DATA_DIR_INVALID / "too_many_tokens.txt")
        assert (exc_info.value.line, exc_info.value.column, exc_info.value.token) == (2, 7, "7")

    def test_too_few_tokens(self) -> None:
        """Test a short row."""
        with pytest.raises(ArrangementParseError, match="found 2"):
            parse_arrangement("1 0\n")

    def test_degenerate(self) -> None:
        """Test that 0 0 c is refused."""
        with pytest.raises(ArrangementParseError, match="degenerate line"):
            read_arrangement(DATA_DIR_INVALID / "degenerate.txt")

    def test_empty(self) -> None:
        """Test that a file without lines is refused."""
        with pytest.raises(ArrangementParseError, match="no lines"):
            read_arrangement(DATA_DIR_INVALID / "empty.txt")

    @pytest.mark.parametrize("filepath", VALID_FILES, ids=lambda p: p.stem)
    def test_valid_data_files(self, filepath: Path) -> None:
        """Test that every valid data file parses."""
        assert read_arrangement(filepath).size >= 3


class TestWrite:
    """Tests for serialize_arrangement() and write_arrangement()."""

    def test_serialize(self, six_parallel: Arrangement) -> None:
        """Test the text layout."""
        text = serialize_arrangement(six_parallel, comment="p = 3")
        assert text.splitlines()[0] == "# p = 3"
        assert text.splitlines()[5] == "1 1 -1/2"
        assert text.endswith("\n")

    def test_write_and_read(self, tmp_path: Path, six_parallel: Arrangement) -> None:
        """Test that a written file reads back to the same arrangement."""
        path = tmp_path / "nested" / "six.txt"
        write_arrangement(six_parallel, path)
        assert read_arrangement(path) == six_parallel
