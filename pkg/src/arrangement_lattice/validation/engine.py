"""Validation of arrangements.

Main entry points:
- validate(): collect findings into a ValidationReport
- require_buildable() / require_lattice_ready(): turn a report into an exception
- format_validation_report(): human-readable summary
"""

from __future__ import annotations

import logging
from collections import defaultdict
from itertools import combinations
from typing import TYPE_CHECKING

from arrangement_lattice.errors import ConditionViolationError, NotNodalError
from arrangement_lattice.geometry.predicates import intersect
from arrangement_lattice.validation.base import (
    IssueType,
    Severity,
    ValidationIssue,
    ValidationReport,
)

if TYPE_CHECKING:
    from fractions import Fraction

    from arrangement_lattice.geometry.models import Arrangement, Point

logger = logging.getLogger(__name__)


def validate(arr: Arrangement) -> ValidationReport:
    """Check an arrangement for triple points, repeated lines and parallel classes.

    Concurrency is decided for every triple at once by grouping lines on
    their pairwise crossing points: a point shared by three or more lines is
    exactly a concurrent triple.

    Args:
        arr: Arrangement to check

    Returns:
        ValidationReport with every finding
    """
    report = ValidationReport(n_lines=arr.size)

    if arr.size < 3:
        report.add_issue(
            ValidationIssue(
                line_ids=tuple(range(arr.size)),
                issue_type=IssueType.TOO_FEW_LINES,
                severity=Severity.WARNING if arr.size == 2 else Severity.ERROR,
                message=f"{arr.size} lines; lattice workflows need at least 3",
            )
        )

    by_locus: dict[tuple[Fraction, Fraction, Fraction], list[int]] = defaultdict(list)
    for line in arr:
        by_locus[(line.a, line.b, line.c)].append(line.id)
    for ids in by_locus.values():
        for i, j in combinations(ids, 2):
            report.duplicates.append((i, j))
            report.add_issue(
                ValidationIssue(
                    line_ids=(i, j),
                    issue_type=IssueType.DUPLICATE_LINE,
                    severity=Severity.ERROR,
                    message=f"lines {i} and {j} are the same locus {arr[i]}",
                )
            )
    distinct = [arr[ids[0]] for ids in by_locus.values()]

    by_direction: dict[tuple[Fraction, Fraction], list[int]] = defaultdict(list)
    for line in distinct:
        by_direction[line.direction_class].append(line.id)
    for ids in by_direction.values():
        if len(ids) < 2:
            continue
        group = tuple(sorted(ids))
        report.parallel_classes.append(group)
        report.parallel_pairs += len(group) * (len(group) - 1) // 2
        if len(group) > 2:
            report.add_issue(
                ValidationIssue(
                    line_ids=group,
                    issue_type=IssueType.PARALLEL_CLASS,
                    severity=Severity.WARNING,
                    message=f"{len(group)} mutually parallel lines; at most 2 allowed for lattice predictions",
                )
            )
        else:
            report.add_issue(
                ValidationIssue(
                    line_ids=group,
                    issue_type=IssueType.PARALLEL_PAIR,
                    severity=Severity.INFO,
                    message="parallel pair",
                )
            )
    report.parallel_classes.sort()

    through: dict[Point, set[int]] = defaultdict(set)
    for l1, l2 in combinations(distinct, 2):
        point = intersect(l1, l2)
        if point is not None:
            through[point].update((l1.id, l2.id))
    for point, ids in sorted(through.items()):
        if len(ids) >= 3:
            report.nodal = False
            report.add_issue(
                ValidationIssue(
                    line_ids=tuple(sorted(ids)),
                    issue_type=IssueType.TRIPLE_POINT,
                    severity=Severity.ERROR,
                    message=f"{len(ids)} lines concurrent at ({point.x}, {point.y})",
                    point=point,
                )
            )
    if report.duplicates:
        report.nodal = False

    logger.debug(
        f"Validated {arr.size} lines: nodal={report.nodal}, p={report.parallel_pairs}, "
        f"parallel classes={report.parallel_classes}"
    )
    return report


def require_buildable(report: ValidationReport) -> None:
    """Raise unless the chamber complex can be built.

    Raises:
        NotNodalError: On triple points or repeated lines
        ValueError: On fewer than 2 lines
    """
    if report.n_lines < 2:
        raise ValueError(f"need at least 2 lines to build a chamber complex, got {report.n_lines}")
    if not report.nodal:
        details = "; ".join(str(i) for i in report.get_issues_by_severity(Severity.ERROR))
        raise NotNodalError(f"not nodal: {details}")


def require_lattice_ready(report: ValidationReport) -> None:
    """Raise unless closed-form lattice predictions apply.

    Raises:
        NotNodalError: If the arrangement is not nodal
        ConditionViolationError: If a parallel class has 3 or more lines or N < 3
    """
    require_buildable(report)
    if report.n_lines < 3:
        raise ConditionViolationError(f"lattice predictions need N >= 3, got {report.n_lines}")
    if not report.parallel_condition:
        big = [group for group in report.parallel_classes if len(group) > 2]
        raise ConditionViolationError(
            f"parallel classes {big} have more than two lines; "
            "the closed-form predictions assume every parallel class has at most two lines"
        )


def format_validation_report(report: ValidationReport, verbose: bool = False) -> str:
    """Render a human-readable validation summary.

    Args:
        report: ValidationReport to render
        verbose: If True, include INFO-level issues
    """
    out = [
        "VALIDATION REPORT",
        "=" * 60,
        f"Lines:              {report.n_lines}",
        f"Nodal:              {report.nodal}",
        f"Parallel pairs (p): {report.parallel_pairs}",
        f"Parallel classes:   {report.parallel_classes or 'none'}",
        f"Classes of size<=2: {report.parallel_condition}",
    ]
    severities = [Severity.ERROR, Severity.WARNING] + ([Severity.INFO] if verbose else [])
    for severity in severities:
        issues = report.get_issues_by_severity(severity)
        if issues:
            out.append(f"{severity.name}S ({len(issues)}):")
            out.extend(f"  {issue}" for issue in issues)
    return "\n".join(out)
