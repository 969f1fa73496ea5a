"""End-to-end analysis of one arrangement.

validate -> build the chamber complex -> standard Gram (and the Gram for the
requested orientation) -> lattice invariants -> closed-form prediction and
cross-check -> optional flip-oracle run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from arrangement_lattice.chambers.complex import build, ngon_profile
from arrangement_lattice.config import get_settings
from arrangement_lattice.errors import CrossCheckError
from arrangement_lattice.gram import gram_matrix, gram_via_flip_oracle
from arrangement_lattice.infinity import counts, cross_check, predict
from arrangement_lattice.lattice.invariants import compute_invariants
from arrangement_lattice.orientation import (
    OrientationAssignment,
    all_assignments,
    parse_orientation,
    random_assignments,
)
from arrangement_lattice.validation.engine import require_buildable, validate

if TYPE_CHECKING:
    from arrangement_lattice.chambers.models import ChamberComplex
    from arrangement_lattice.config import Settings
    from arrangement_lattice.geometry.models import Arrangement
    from arrangement_lattice.gram import GramMatrix
    from arrangement_lattice.infinity import CheckReport, Prediction
    from arrangement_lattice.lattice.invariants import LatticeInvariants
    from arrangement_lattice.validation.base import ValidationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of comparing direct Gram assembly with the flip base change.

    Attributes:
        assignments_checked: Number of orientation assignments compared
        exhaustive: Whether every assignment was compared
        mismatches: Flipped chamber ids of each assignment that disagreed
    """

    assignments_checked: int
    exhaustive: bool
    mismatches: tuple[tuple[int, ...], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.mismatches


def run_flip_oracle(
    cc: ChamberComplex,
    standard_gram: GramMatrix,
    *,
    exhaustive_limit: int,
    samples: int,
    seed: int = 0,
    extra: list[OrientationAssignment] | None = None,
) -> OracleResult:
    """Check ``gram_matrix`` against ``gram_via_flip_oracle`` over many assignments.

    All 2**B assignments are compared when B <= ``exhaustive_limit``;
    otherwise ``samples`` seeded random ones.
    """
    n_chambers = len(cc.bounded_chamber_ids)
    exhaustive = n_chambers <= exhaustive_limit
    assignments = list(all_assignments(cc) if exhaustive else random_assignments(cc, samples, seed))
    assignments.extend(extra or [])
    mismatches: list[tuple[int, ...]] = []
    for oa in assignments:
        if gram_matrix(cc, oa) != gram_via_flip_oracle(cc, standard_gram, oa):
            mismatches.append(tuple(oa.flipped))
    if mismatches:
        logger.warning(f"Flip oracle disagreed on {len(mismatches)} of {len(assignments)} assignments")
    else:
        logger.info(f"Flip oracle agreed on {len(assignments)} assignments (exhaustive={exhaustive})")
    return OracleResult(len(assignments), exhaustive, tuple(mismatches))


@dataclass(frozen=True)
class Analysis:
    """Every artifact computed for one arrangement."""

    arrangement: Arrangement
    validation: ValidationReport
    complex: ChamberComplex
    orientation: OrientationAssignment
    standard_gram: GramMatrix
    gram: GramMatrix
    invariants: LatticeInvariants
    prediction: Prediction | None = None
    check: CheckReport | None = None
    oracle: OracleResult | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def profile(self) -> dict[int, int]:
        return ngon_profile(self.complex)


def analyze(
    arr: Arrangement,
    *,
    orientation: str | OrientationAssignment | None = None,
    run_oracle: bool = False,
    settings: Settings | None = None,
    seed: int = 0,
) -> Analysis:
    """Run the full pipeline on one arrangement.

    Args:
        arr: Nodal arrangement
        orientation: "standard", a sign list like "+,-,+", or an assignment
        run_oracle: Also compare direct assembly with the flip base change
        settings: Oracle sizes; read from the environment when omitted
        seed: Seed for random oracle assignments

    Returns:
        Analysis with every artifact; prediction and check are None when the
        closed forms do not apply (N < 3 or a parallel class of 3+ lines)

    Raises:
        NotNodalError: If the arrangement is not nodal
        ValueError: On a malformed orientation
        CrossCheckError: If internal bookkeeping is inconsistent
    """
    settings = settings or get_settings()
    report = validate(arr)
    require_buildable(report)
    cc = build(arr)
    if not cc.euler_check():
        raise CrossCheckError(f"Euler bookkeeping failed: {cc.frame}")

    standard = OrientationAssignment.standard(cc)
    if orientation is None:
        oa = standard
    elif isinstance(orientation, str):
        oa = parse_orientation(cc, orientation)
    else:
        oa = orientation
        oa.check_total(cc)
    standard_gram = gram_matrix(cc, standard)
    gram = standard_gram if oa.is_standard else gram_matrix(cc, oa)
    invariants = compute_invariants(standard_gram.rows())

    notes: list[str] = []
    prediction: Prediction | None = None
    check: CheckReport | None = None
    if report.lattice_ready:
        expected = counts(arr.size, report.parallel_pairs)
        actual = (len(cc.bounded_chamber_ids), len(cc.vertices))
        if actual != expected:
            raise CrossCheckError(f"(bounded chambers, vertices) = {actual}, closed form gives {expected}")
        prediction = predict(arr.size, report.parallel_pairs)
        check = cross_check(invariants, prediction, n_lines=arr.size, parallel_pairs=report.parallel_pairs)
    else:
        notes.append("closed-form predictions skipped: they need N >= 3 and parallel classes of at most two lines")

    oracle = None
    if run_oracle:
        oracle = run_flip_oracle(
            cc,
            standard_gram,
            exhaustive_limit=settings.exhaustive_limit,
            samples=settings.oracle_samples,
            seed=seed,
            extra=None if oa.is_standard else [oa],
        )
    return Analysis(
        arrangement=arr,
        validation=report,
        complex=cc,
        orientation=oa,
        standard_gram=standard_gram,
        gram=gram,
        invariants=invariants,
        prediction=prediction,
        check=check,
        oracle=oracle,
        notes=notes,
    )
