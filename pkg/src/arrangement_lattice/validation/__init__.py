"""Arrangement validation framework.

Main entry points:
    - validate(): check nodality, parallel classes and repeated lines
    - require_buildable(), require_lattice_ready(): raise on disqualifying findings

Example:
    from arrangement_lattice.validation import validate, format_validation_report

    report = validate(arrangement)
    print(format_validation_report(report))
"""

from arrangement_lattice.validation.base import (
    IssueType,
    Severity,
    ValidationIssue,
    ValidationReport,
)
from arrangement_lattice.validation.engine import (
    format_validation_report,
    require_buildable,
    require_lattice_ready,
    validate,
)

__all__ = [
    "IssueType",
    "Severity",
    "ValidationIssue",
    "ValidationReport",
    "format_validation_report",
    "require_buildable",
    "require_lattice_ready",
    "validate",
]
