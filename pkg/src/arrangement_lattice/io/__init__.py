"""File formats: arrangement text files, JSON reports and SVG drawings."""

from arrangement_lattice.io.arrangement_file import (
    format_rational,
    parse_arrangement,
    parse_rational,
    read_arrangement,
    serialize_arrangement,
    write_arrangement,
)
from arrangement_lattice.io.render import render_svg, write_svg
from arrangement_lattice.io.report import SCHEMA_VERSION, Report, build_report, export_report, report_schema

__all__ = [
    "SCHEMA_VERSION",
    "Report",
    "build_report",
    "export_report",
    "format_rational",
    "parse_arrangement",
    "parse_rational",
    "read_arrangement",
    "render_svg",
    "report_schema",
    "serialize_arrangement",
    "write_arrangement",
    "write_svg",
]
