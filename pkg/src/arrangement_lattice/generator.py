"""Random nodal arrangements with a prescribed number of parallel pairs.

Directions and intercepts are random rationals with bounded numerators and
denominators, drawn from Python's seeded Mersenne Twister
(``random.Random``). Candidates are validated exactly and rejected until one
is nodal with exactly p parallel pairs, each parallel class of size at most 2.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from arrangement_lattice.config import get_settings
from arrangement_lattice.errors import GenerationError
from arrangement_lattice.geometry.models import Arrangement, Line
from arrangement_lattice.validation.engine import validate

logger = logging.getLogger(__name__)

MAX_SEED = 2**64


class GenSpec(BaseModel):
    """Parameters of a random arrangement."""

    model_config = ConfigDict(frozen=True)

    n_lines: int = Field(..., ge=3, description="Number of lines N")
    parallel_pairs: int = Field(0, ge=0, description="Number of parallel pairs p")
    seed: int = Field(0, ge=0, lt=MAX_SEED, description="64-bit seed")
    coefficient_bound: int = Field(1000, ge=1, description="Bound on numerators and denominators")

    @model_validator(mode="after")
    def _check_pairs(self) -> GenSpec:
        if 2 * self.parallel_pairs > self.n_lines:
            raise ValueError(f"need 2p <= N, got N={self.n_lines}, p={self.parallel_pairs}")
        return self


def _rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _direction(rng: random.Random, bound: int) -> tuple[Fraction, Fraction]:
    """Normalized normal vector: (1, s) for a bounded rational s, rarely (0, 1).

    s = 0 gives vertical lines; (0, 1) gives horizontal ones.
    """
    if rng.randrange(2 * bound + 1) == 0:
        return Fraction(0), Fraction(1)
    return Fraction(1), _rational(rng, bound)


def _candidate(request: GenSpec, rng: random.Random) -> list[tuple[Fraction, Fraction, Fraction]] | None:
    """One draw of coefficient rows, or None on a direction or intercept collision."""
    bound = request.coefficient_bound
    n_classes = request.n_lines - request.parallel_pairs
    directions = [_direction(rng, bound) for _ in range(n_classes)]
    if len(set(directions)) != n_classes:
        return None
    rows: list[tuple[Fraction, Fraction, Fraction]] = []
    for k, (a, b) in enumerate(directions):
        intercepts = {_rational(rng, bound) for _ in range(2 if k < request.parallel_pairs else 1)}
        if len(intercepts) != (2 if k < request.parallel_pairs else 1):
            return None
        rows.extend((a, b, c) for c in sorted(intercepts))
    rng.shuffle(rows)
    return rows


def random_arrangement(request: GenSpec, retry_budget: int | None = None) -> Arrangement:
    """Draw a random nodal arrangement matching ``request``.

    Deterministic for a fixed request. The result always passes ``validate``.

    Args:
        request: Line count, parallel pair count, seed and coefficient bound
        retry_budget: Attempts before giving up; defaults to the configured budget

    Returns:
        Arrangement with exactly N lines and p parallel pairs

    Raises:
        GenerationError: If no valid arrangement is found within the budget
    """
    budget = retry_budget if retry_budget is not None else get_settings().retry_budget
    rng = random.Random(request.seed)
    last_reason = "no attempt made"
    for attempt in range(1, budget + 1):
        rows = _candidate(request, rng)
        if rows is None:
            last_reason = "direction or intercept collision"
            continue
        arr = Arrangement(tuple(Line(a, b, c, id=i) for i, (a, b, c) in enumerate(rows)))
        report = validate(arr)
        if report.nodal and report.parallel_pairs == request.parallel_pairs and report.parallel_condition:
            logger.debug(f"Generated N={request.n_lines}, p={request.parallel_pairs} after {attempt} attempt(s)")
            return arr
        last_reason = f"nodal={report.nodal}, p={report.parallel_pairs}"
        logger.debug(f"Attempt {attempt} rejected: {last_reason}")
    raise GenerationError(
        f"no nodal arrangement with N={request.n_lines}, p={request.parallel_pairs} "
        f"(bound {request.coefficient_bound}, seed {request.seed}) after {budget} attempts; last rejection: {last_reason}"
    )
