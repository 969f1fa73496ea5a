"""
JSON report of an arrangement analysis.

The report is a pydantic model serialized with ``model_dump_json``. The
Gram matrix is an array of integer rows with a basis legend in the same
order. ``schema_version`` is bumped on any incompatible change; the JSON
Schema is ``Report.model_json_schema()``.
"""

from __future__ import annotations

import json
import logging
from math import prod
from typing import TYPE_CHECKING, Literal

from pydantic import BaseModel, Field, model_validator

from arrangement_lattice.io.arrangement_file import format_rational

if TYPE_CHECKING:
    from pathlib import Path

    from arrangement_lattice.analysis import Analysis, OracleResult
    from arrangement_lattice.infinity import CheckReport, Prediction
    from arrangement_lattice.lattice.invariants import LatticeInvariants
    from arrangement_lattice.validation.base import ValidationReport

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"


class LineRecord(BaseModel):
    """One normalized line ``a*x + b*y + c = 0``.

    Examples:
        >>> LineRecord(id=0, a="1", b="1", c="-1/2").c
        '-1/2'
    """

    id: int = Field(..., ge=0)
    a: str = Field(..., description="Rational coefficient of x")
    b: str = Field(..., description="Rational coefficient of y")
    c: str = Field(..., description="Rational constant term")


class ValidationBlock(BaseModel):
    """Validation findings."""

    nodal: bool
    parallel_pairs: int = Field(..., ge=0)
    parallel_classes: list[list[int]] = Field(default_factory=list)
    parallel_condition: bool = Field(..., description="Every parallel class has at most two lines")
    duplicates: list[list[int]] = Field(default_factory=list)
    issues: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ValidationReport) -> ValidationBlock:
        return cls(
            nodal=report.nodal,
            parallel_pairs=report.parallel_pairs,
            parallel_classes=[list(g) for g in report.parallel_classes],
            parallel_condition=report.parallel_condition,
            duplicates=[list(d) for d in report.duplicates],
            issues=[str(i) for i in report.issues],
        )


class ComplexSummary(BaseModel):
    """Counts of the chamber complex."""

    n_lines: int
    vertex_count: int
    edge_count: int
    chamber_count: int
    bounded_chamber_count: int
    unbounded_chamber_count: int
    ngon_profile: dict[int, int] = Field(..., description="Number of bounded n-gons for each n")


class OrientationBlock(BaseModel):
    """Orientation signs of the bounded chamber cycles, in basis order."""

    mode: Literal["standard", "explicit"]
    signs: list[int]


class InvariantsBlock(BaseModel):
    """Invariants of the standard Gram matrix."""

    ambient_rank: int
    kernel_rank: int
    nondeg_rank: int
    signature: tuple[int, int]
    invariant_factors: list[int]
    disc: list[int] = Field(..., description="Invariant factors of the discriminant group")
    disc_label: str
    det_abs: int

    @classmethod
    def from_invariants(cls, inv: LatticeInvariants) -> InvariantsBlock:
        return cls(
            ambient_rank=inv.ambient_rank,
            kernel_rank=inv.kernel_rank,
            nondeg_rank=inv.nondeg_rank,
            signature=inv.signature,
            invariant_factors=list(inv.invariant_factors),
            disc=list(inv.disc.factors),
            disc_label=str(inv.disc),
            det_abs=inv.det_abs,
        )


class PredictionBlock(BaseModel):
    """Closed-form values for (N, p)."""

    n_lines: int
    parallel_pairs: int
    n_tilde: int
    cham_b_count: int
    node_count: int
    h2_rank: int
    ambient_rank: int
    ambient_signature: tuple[int, int]
    h_inf_rank: int
    h_inf_signature: tuple[int, int]
    h_inf_disc: list[int]
    h_inf_disc_label: str
    perp_rank: int
    perp_signature: tuple[int, int]

    @classmethod
    def from_prediction(cls, pred: Prediction) -> PredictionBlock:
        return cls(
            n_lines=pred.n_lines,
            parallel_pairs=pred.parallel_pairs,
            n_tilde=pred.n_tilde,
            cham_b_count=pred.cham_b_count,
            node_count=pred.node_count,
            h2_rank=pred.h2_rank,
            ambient_rank=pred.ambient_rank,
            ambient_signature=pred.ambient_signature,
            h_inf_rank=pred.h_inf_rank,
            h_inf_signature=pred.h_inf_signature,
            h_inf_disc=list(pred.h_inf_disc.factors),
            h_inf_disc_label=str(pred.h_inf_disc),
            perp_rank=pred.perp_rank,
            perp_signature=pred.perp_signature,
        )


class CrossCheckBlock(BaseModel):
    """Verdicts of the comparison with the prediction."""

    passed: bool
    rank_signature_ok: bool
    subquotient_ok: bool
    disc_isomorphic: bool = Field(..., description="Observation only; never fails a check")
    odd_nondegenerate: bool | None
    h2_rank_ok: bool
    index_squared: int | None
    h_inf_primitive: bool
    messages: list[str] = Field(default_factory=list)

    @classmethod
    def from_check(cls, check: CheckReport) -> CrossCheckBlock:
        return cls(
            passed=check.passed,
            rank_signature_ok=check.rank_signature_ok,
            subquotient_ok=check.subquotient_ok,
            disc_isomorphic=check.disc_isomorphic,
            odd_nondegenerate=check.odd_nondegenerate,
            h2_rank_ok=check.h2_rank_ok,
            index_squared=check.index_squared,
            h_inf_primitive=check.h_inf_primitive,
            messages=list(check.messages),
        )


class OracleBlock(BaseModel):
    """Outcome of the flip base-change oracle."""

    passed: bool
    assignments_checked: int
    exhaustive: bool
    mismatches: list[list[int]] = Field(default_factory=list)

    @classmethod
    def from_result(cls, result: OracleResult) -> OracleBlock:
        return cls(
            passed=result.passed,
            assignments_checked=result.assignments_checked,
            exhaustive=result.exhaustive,
            mismatches=[list(m) for m in result.mismatches],
        )


class Report(BaseModel):
    """Full analysis of one arrangement."""

    schema_version: Literal["1.0"] = SCHEMA_VERSION
    arrangement: list[LineRecord]
    validation: ValidationBlock
    complex: ComplexSummary
    orientation: OrientationBlock
    basis: list[str] = Field(..., description="Basis legend: chamber cycles, then vertex curves")
    gram: list[list[int]] = Field(..., description="Gram matrix rows in basis order")
    invariants: InvariantsBlock
    prediction: PredictionBlock | None = None
    cross_check: CrossCheckBlock | None = None
    oracle: OracleBlock | None = None
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> Report:
        size = self.complex.bounded_chamber_count + self.complex.vertex_count
        if len(self.basis) != size or len(self.gram) != size or any(len(row) != size for row in self.gram):
            raise ValueError(f"Gram/basis dimension does not match |Ch_b| + |P| = {size}")
        if self.invariants.ambient_rank != size:
            raise ValueError(f"ambient rank {self.invariants.ambient_rank} != {size}")
        order = prod(self.invariants.disc)
        if order != self.invariants.det_abs:
            raise ValueError(f"|disc| = {order} but |det| = {self.invariants.det_abs}")
        return self


def build_report(analysis: Analysis) -> Report:
    """Convert an Analysis into its serializable report."""
    cc = analysis.complex
    n_bounded = len(cc.bounded_chamber_ids)
    return Report(
        arrangement=[
            LineRecord(id=ln.id, a=format_rational(ln.a), b=format_rational(ln.b), c=format_rational(ln.c))
            for ln in analysis.arrangement
        ],
        validation=ValidationBlock.from_report(analysis.validation),
        complex=ComplexSummary(
            n_lines=analysis.arrangement.size,
            vertex_count=len(cc.vertices),
            edge_count=len(cc.edges),
            chamber_count=len(cc.chambers),
            bounded_chamber_count=n_bounded,
            unbounded_chamber_count=len(cc.chambers) - n_bounded,
            ngon_profile=analysis.profile,
        ),
        orientation=OrientationBlock(
            mode="standard" if analysis.orientation.is_standard else "explicit",
            signs=analysis.orientation.signs(),
        ),
        basis=analysis.gram.basis.labels(),
        gram=analysis.gram.rows(),
        invariants=InvariantsBlock.from_invariants(analysis.invariants),
        prediction=PredictionBlock.from_prediction(analysis.prediction) if analysis.prediction else None,
        cross_check=CrossCheckBlock.from_check(analysis.check) if analysis.check else None,
        oracle=OracleBlock.from_result(analysis.oracle) if analysis.oracle else None,
        notes=list(analysis.notes),
    )


def export_report(report: Report, path: Path) -> None:
    """Write a report as indented JSON."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Exported report to {path}")


def report_schema() -> str:
    """JSON Schema of the report model."""
    return json.dumps(Report.model_json_schema(), indent=2)
