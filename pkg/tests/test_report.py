"""Tests for the JSON report."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from arrangement_lattice.analysis import analyze
from arrangement_lattice.geometry.models import Arrangement
from arrangement_lattice.io import SCHEMA_VERSION, Report, build_report, export_report, report_schema


class TestBuildReport:
    """Tests for build_report()."""

    def test_triangle(self, triangle: Arrangement) -> None:
        """Test the blocks of a three-line report."""
        report = build_report(analyze(triangle))
        assert report.schema_version == SCHEMA_VERSION
        assert [line.c for line in report.arrangement] == ["0", "0", "-1"]
        assert report.basis == ["Sigma(C0)", "D(P0)", "D(P1)", "D(P2)"]
        assert report.gram[0] == [-2, -1, -1, -1]
        assert report.invariants.disc_label == "(Z/2)^2"
        assert report.orientation.mode == "standard"
        assert report.cross_check is not None
        assert report.cross_check.passed
        assert report.oracle is None

    def test_parallel_labels(self, six_parallel: Arrangement) -> None:
        """Test rational formatting and the prediction block."""
        report = build_report(analyze(six_parallel))
        assert report.arrangement[4].c == "-1/2"
        assert report.validation.parallel_pairs == 3
        assert report.prediction is not None
        assert report.prediction.h_inf_disc == [2, 2, 4]
        assert report.complex.ngon_profile == {3: 4, 4: 2, 5: 1}

    def test_explicit_orientation(self, triangle: Arrangement) -> None:
        """Test that a flipped assignment is recorded."""
        report = build_report(analyze(triangle, orientation="-"))
        assert report.orientation.mode == "explicit"
        assert report.orientation.signs == [-1]

    def test_json_round_trip(self, six_generic: Arrangement) -> None:
        """Test that the dumped JSON validates back to an equal report."""
        report = build_report(analyze(six_generic, run_oracle=True))
        assert Report.model_validate_json(report.model_dump_json()) == report

    def test_inconsistent_dimensions_refused(self, triangle: Arrangement) -> None:
        """Test the Gram size self-check."""
        data = build_report(analyze(triangle)).model_dump()
        data["gram"] = data["gram"][:-1]
        with pytest.raises(ValidationError, match="dimension"):
            Report.model_validate(data)

    def test_inconsistent_disc_refused(self, triangle: Arrangement) -> None:
        """Test the |disc| = |det| self-check."""
        data = build_report(analyze(triangle)).model_dump()
        data["invariants"]["disc"] = [2]
        with pytest.raises(ValidationError, match="det"):
            Report.model_validate(data)


class TestExport:
    """Tests for export_report() and report_schema()."""

    def test_export(self, tmp_path: Path, triangle: Arrangement) -> None:
        """Test writing the report to a nested path."""
        path = tmp_path / "out" / "triangle.json"
        export_report(build_report(analyze(triangle)), path)
        data = json.loads(path.read_text())
        assert data["invariants"]["det_abs"] == 4
        assert data["invariants"]["signature"] == [0, 4]

    def test_schema(self) -> None:
        """Test that the schema describes the report."""
        schema = json.loads(report_schema())
        assert schema["title"] == "Report"
        assert "gram" in schema["properties"]
        assert "gram" in schema["required"]

    def test_committed_schema(self) -> None:
        """Test that the committed schema file matches the report model."""
        path = Path(__file__).parents[1] / "schema" / f"report-{SCHEMA_VERSION}.json"
        assert json.loads(path.read_text(encoding="utf-8")) == Report.model_json_schema()
