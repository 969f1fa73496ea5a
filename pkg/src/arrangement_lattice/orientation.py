"""Orientation choices for the vanishing cycles of bounded chambers.

Each bounded chamber carries a standard orientation fixed by the sign of
the defining polynomial (the product of the normalized linear forms) on the
chamber. An ``OrientationAssignment`` records, per bounded chamber, whether
the chosen orientation agrees (+1) or disagrees (-1) with the standard one.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import TYPE_CHECKING

from arrangement_lattice.chambers.complex import touching_pairs
from arrangement_lattice.chambers.models import MeetAtPoint, PairClass
from arrangement_lattice.errors import ArrangementLatticeError, CoherenceUndefinedError

if TYPE_CHECKING:
    from arrangement_lattice.chambers.models import Chamber, ChamberComplex
    from arrangement_lattice.geometry.models import Arrangement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChamberSign:
    """Sign of the defining polynomial on an open bounded chamber."""

    chamber_id: int
    sign: int


@dataclass(frozen=True)
class OrientationAssignment:
    """Relative orientation sign for every bounded chamber.

    Attributes:
        eps: Bounded chamber id -> +1 (standard orientation) or -1 (reversed)
    """

    eps: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        bad = {cid: s for cid, s in self.eps.items() if s not in (1, -1)}
        if bad:
            raise ValueError(f"orientation signs must be +1 or -1, got {bad}")
        object.__setattr__(self, "eps", dict(sorted(self.eps.items())))

    @classmethod
    def standard(cls, cc: ChamberComplex) -> OrientationAssignment:
        """All chambers with their standard orientation."""
        return cls({cid: 1 for cid in cc.bounded_chamber_ids})

    @classmethod
    def from_signs(cls, cc: ChamberComplex, signs: list[int]) -> OrientationAssignment:
        """Assignment from a sign list in ascending bounded chamber id order.

        Raises:
            ValueError: If the list length differs from the bounded chamber count
        """
        if len(signs) != len(cc.bounded_chamber_ids):
            raise ValueError(
                f"sign list has {len(signs)} entries but there are {len(cc.bounded_chamber_ids)} bounded chambers"
            )
        return cls(dict(zip(cc.bounded_chamber_ids, signs, strict=True)))

    def sign(self, chamber_id: int) -> int:
        return self.eps[chamber_id]

    @property
    def flipped(self) -> list[int]:
        """Chamber ids with reversed orientation."""
        return [cid for cid, s in self.eps.items() if s == -1]

    @property
    def is_standard(self) -> bool:
        return not self.flipped

    def signs(self) -> list[int]:
        return list(self.eps.values())

    def check_total(self, cc: ChamberComplex) -> None:
        """Raise unless the assignment covers exactly the bounded chambers."""
        if set(self.eps) != set(cc.bounded_chamber_ids):
            raise ValueError("orientation assignment must cover exactly the bounded chambers")


def chamber_sign(arr: Arrangement, chamber: Chamber) -> int:
    """Sign of the defining polynomial on a bounded chamber.

    The product of the chamber's sign vector entries, which are the signs of
    the normalized linear forms at its interior point.

    Raises:
        ValueError: If the chamber is unbounded
        ArrangementLatticeError: If the interior point lies on a line
    """
    if not chamber.bounded:
        raise ValueError(f"chamber {chamber.id} is unbounded")
    if len(chamber.sign_vector) != arr.size or 0 in chamber.sign_vector:
        raise ArrangementLatticeError(f"chamber {chamber.id} has a degenerate sign vector {chamber.sign_vector}")
    return prod(chamber.sign_vector)


def chamber_signs(cc: ChamberComplex) -> list[ChamberSign]:
    """Signs of the defining polynomial on all bounded chambers."""
    return [ChamberSign(c.id, chamber_sign(cc.arrangement, c)) for c in cc.bounded_chambers()]


def coherent(pc: PairClass, e1: int, e2: int) -> bool:
    """Whether two chambers meeting at a vertex carry coherent orientations.

    The standard pair is coherent, and reversing one orientation swaps its
    capping hemisphere at the shared vertex, so coherence means ``e1 == e2``.

    Raises:
        CoherenceUndefinedError: If the chambers do not meet at exactly one vertex
    """
    if not isinstance(pc, MeetAtPoint):
        raise CoherenceUndefinedError()
    return e1 == e2


def is_coherent_collection(
    cc: ChamberComplex,
    oa: OrientationAssignment,
    pairs: Mapping[tuple[int, int], PairClass] | None = None,
) -> bool:
    """True if every pair of chambers meeting at a single vertex is coherent."""
    oa.check_total(cc)
    if pairs is None:
        pairs = touching_pairs(cc)
    return all(
        coherent(pc, oa.sign(c1), oa.sign(c2)) for (c1, c2), pc in pairs.items() if isinstance(pc, MeetAtPoint)
    )


def all_assignments(cc: ChamberComplex) -> Iterator[OrientationAssignment]:
    """Every one of the 2**B assignments, standard first."""
    ids = cc.bounded_chamber_ids
    for signs in product((1, -1), repeat=len(ids)):
        yield OrientationAssignment(dict(zip(ids, signs, strict=True)))


def random_assignments(cc: ChamberComplex, count: int, seed: int = 0) -> Iterator[OrientationAssignment]:
    """``count`` assignments drawn uniformly with a seeded Mersenne Twister."""
    rng = random.Random(seed)
    ids = cc.bounded_chamber_ids
    for _ in range(count):
        yield OrientationAssignment({cid: rng.choice((1, -1)) for cid in ids})


def parse_orientation(cc: ChamberComplex, text: str) -> OrientationAssignment:
    """Parse ``"standard"`` or a comma-separated sign list like ``"+,-,+"`` or ``"1,-1,1"``.

    Raises:
        ValueError: On unknown tokens or a length mismatch
    """
    text = text.strip()
    if text.lower() == "standard":
        return OrientationAssignment.standard(cc)
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    lookup = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    unknown = [t for t in tokens if t not in lookup]
    if unknown:
        raise ValueError(f"unknown orientation signs {unknown}; use +, -, 1 or -1")
    return OrientationAssignment.from_signs(cc, [lookup[t] for t in tokens])
