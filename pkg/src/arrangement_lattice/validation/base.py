"""Data structures for arrangement validation.

Validation is report-based: every finding becomes a ``ValidationIssue``
collected into a ``ValidationReport``; nothing here raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from enum import Enum

from arrangement_lattice.geometry.models import Point  # noqa: TC001 - dataclass field type


class Severity(Enum):
    """Severity levels for validation issues."""

    ERROR = "error"  # Arrangement cannot be processed
    WARNING = "warning"  # Complex builds, lattice predictions do not apply
    INFO = "info"  # Informational finding


class IssueType(Enum):
    """Types of validation issues."""

    TRIPLE_POINT = "triple_point"  # Three or more lines through one point
    DUPLICATE_LINE = "duplicate_line"  # Same locus listed twice
    PARALLEL_CLASS = "parallel_class"  # Parallel class of size >= 3
    PARALLEL_PAIR = "parallel_pair"  # Parallel class of size 2
    TOO_FEW_LINES = "too_few_lines"  # Below the size a workflow needs


@dataclass
class ValidationIssue:
    """A single finding about an arrangement."""

    line_ids: tuple[int, ...]
    issue_type: IssueType
    severity: Severity
    message: str
    point: Point | None = None

    def __str__(self) -> str:
        """Format issue for display."""
        sev_str = self.severity.value.upper()
        lines = ",".join(str(i) for i in self.line_ids)
        return f"[{sev_str}] lines {lines} [{self.issue_type.value}]: {self.message}"


@dataclass
class ValidationReport:
    """Findings of ``validate`` for one arrangement.

    Attributes:
        n_lines: Number of lines N
        nodal: No three lines concurrent and no repeated line
        parallel_pairs: Number p of unordered pairs of distinct parallel lines
        parallel_classes: Line ids of every parallel class with two or more lines
        duplicates: Pairs of line ids describing the same locus
        issues: Individual findings
        stats: Issue counts by type
    """

    n_lines: int = 0
    nodal: bool = True
    parallel_pairs: int = 0
    parallel_classes: list[tuple[int, ...]] = dc_field(default_factory=list)
    duplicates: list[tuple[int, int]] = dc_field(default_factory=list)
    issues: list[ValidationIssue] = dc_field(default_factory=list)
    stats: dict[str, int] = dc_field(default_factory=dict)

    def add_issue(self, issue: ValidationIssue) -> None:
        """Add an issue and update stats."""
        self.issues.append(issue)
        key = issue.issue_type.value
        self.stats[key] = self.stats.get(key, 0) + 1

    @property
    def parallel_condition(self) -> bool:
        """Every parallel class has at most two lines."""
        return all(len(group) <= 2 for group in self.parallel_classes)

    @property
    def buildable(self) -> bool:
        """The chamber complex can be built."""
        return self.nodal and not self.duplicates and self.n_lines >= 2

    @property
    def lattice_ready(self) -> bool:
        """Lattice predictions apply: buildable, at least 3 lines, parallel classes of size <= 2."""
        return self.buildable and self.n_lines >= 3 and self.parallel_condition

    @property
    def error_count(self) -> int:
        """Count of ERROR severity issues."""
        return sum(1 for i in self.issues if i.severity == Severity.ERROR)

    @property
    def warning_count(self) -> int:
        """Count of WARNING severity issues."""
        return sum(1 for i in self.issues if i.severity == Severity.WARNING)

    def get_issues_by_severity(self, severity: Severity) -> list[ValidationIssue]:
        """Get all issues of a specific severity."""
        return [i for i in self.issues if i.severity == severity]

    def get_issues_by_type(self, issue_type: IssueType) -> list[ValidationIssue]:
        """Get all issues of a specific type."""
        return [i for i in self.issues if i.issue_type == issue_type]
