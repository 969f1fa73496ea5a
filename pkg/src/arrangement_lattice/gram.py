"""Gram matrix of the intersection form on second homology of the double plane.

The basis is the vanishing cycles of the bounded chambers (ascending chamber
id) followed by the exceptional curves over the vertices (ascending vertex
id). Entries:

* cycle/cycle: -2 on the diagonal, -1 for chambers sharing an edge, 0 for
  disjoint chambers, and for chambers meeting at one vertex 0 when their
  orientations are coherent and -1 otherwise;
* cycle/curve: -1 when the vertex is a corner of the chamber, else 0, for
  either orientation of the cycle;
* curve/curve: -2 on the diagonal, 0 otherwise (fibers over distinct points).

Reversing a cycle's orientation replaces it by the sum of the curves over
its corners minus the cycle; ``gram_via_flip_oracle`` applies that base
change to the standard Gram as an independent check of the coherence rule.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from arrangement_lattice.chambers.complex import classify_pair, touching_pairs
from arrangement_lattice.chambers.models import Disjoint, MeetAtPoint, SharedEdge
from arrangement_lattice.orientation import coherent

if TYPE_CHECKING:
    from collections.abc import Mapping

    from arrangement_lattice.chambers.models import ChamberComplex, PairClass
    from arrangement_lattice.orientation import OrientationAssignment

logger = logging.getLogger(__name__)


class BasisKind(Enum):
    """Kinds of basis classes."""

    CHAMBER = "chamber"  # vanishing cycle over a bounded chamber
    VERTEX = "vertex"  # exceptional curve over a vertex


@dataclass(frozen=True)
class BasisElement:
    """One basis class: a chamber cycle or a vertex curve."""

    kind: BasisKind
    id: int

    @property
    def label(self) -> str:
        return f"Sigma(C{self.id})" if self.kind is BasisKind.CHAMBER else f"D(P{self.id})"


@dataclass(frozen=True)
class BasisIndex:
    """Ordered basis: bounded chambers ascending, then vertices ascending."""

    elements: tuple[BasisElement, ...]
    _positions: dict[BasisElement, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._positions.update({el: pos for pos, el in enumerate(self.elements)})

    @classmethod
    def for_complex(cls, cc: ChamberComplex) -> BasisIndex:
        chambers = [BasisElement(BasisKind.CHAMBER, cid) for cid in sorted(cc.bounded_chamber_ids)]
        vertices = [BasisElement(BasisKind.VERTEX, v.id) for v in cc.vertices]
        return cls(tuple(chambers + vertices))

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, element: BasisElement) -> int:
        return self._positions[element]

    def labels(self) -> list[str]:
        return [el.label for el in self.elements]

    @property
    def chamber_count(self) -> int:
        return sum(1 for el in self.elements if el.kind is BasisKind.CHAMBER)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer matrix of the intersection form in a fixed basis."""

    entries: tuple[tuple[int, ...], ...]
    basis: BasisIndex

    @classmethod
    def from_rows(cls, rows: list[list[int]], basis: BasisIndex) -> GramMatrix:
        if len(rows) != len(basis) or any(len(r) != len(basis) for r in rows):
            raise ValueError(f"Gram rows do not match a basis of size {len(basis)}")
        return cls(tuple(tuple(r) for r in rows), basis)

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        """Mutable copy of the entries."""
        return [list(r) for r in self.entries]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i + 1, n))

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(self.size)]


def _pair_class(
    cc: ChamberComplex, c1: int, c2: int, pairs: Mapping[tuple[int, int], PairClass] | None
) -> PairClass:
    if pairs is None:
        return classify_pair(cc, c1, c2)
    return pairs.get((min(c1, c2), max(c1, c2)), Disjoint())


def gram_entry(
    cc: ChamberComplex,
    oa: OrientationAssignment,
    i: BasisElement,
    j: BasisElement,
    pairs: Mapping[tuple[int, int], PairClass] | None = None,
) -> int:
    """Intersection number of two basis classes.

    Args:
        cc: Chamber complex
        oa: Orientation assignment of the chamber cycles
        i: First basis class
        j: Second basis class
        pairs: Precomputed ``touching_pairs(cc)``; classified on demand when omitted

    Returns:
        The intersection number
    """
    if i.kind is BasisKind.VERTEX and j.kind is BasisKind.VERTEX:
        return -2 if i.id == j.id else 0
    if i.kind is BasisKind.VERTEX:
        i, j = j, i
    if j.kind is BasisKind.VERTEX:
        return -1 if j.id in cc.chamber(i.id).vertices else 0
    if i.id == j.id:
        return -2
    match _pair_class(cc, i.id, j.id, pairs):
        case SharedEdge():
            return -1
        case MeetAtPoint() as pc:
            return 0 if coherent(pc, oa.sign(i.id), oa.sign(j.id)) else -1
        case _:
            return 0


def gram_matrix(cc: ChamberComplex, oa: OrientationAssignment) -> GramMatrix:
    """Assemble the Gram matrix for an orientation assignment.

    Args:
        cc: Chamber complex of a nodal arrangement
        oa: Orientation assignment covering exactly the bounded chambers

    Returns:
        GramMatrix in the basis ``BasisIndex.for_complex(cc)``
    """
    oa.check_total(cc)
    basis = BasisIndex.for_complex(cc)
    pairs = touching_pairs(cc)
    n = len(basis)
    rows = [[0] * n for _ in range(n)]
    elements = basis.elements
    for a in range(n):
        for b in range(a, n):
            value = gram_entry(cc, oa, elements[a], elements[b], pairs)
            rows[a][b] = value
            rows[b][a] = value
    logger.debug(f"Assembled {n}x{n} Gram matrix with {len(oa.flipped)} flipped chambers")
    return GramMatrix.from_rows(rows, basis)


def flip_rows(cc: ChamberComplex, basis: BasisIndex, oa: OrientationAssignment) -> dict[int, dict[int, int]]:
    """Sparse rows of the base change for every flipped chamber.

    The reversed cycle of chamber C is the sum of the curves over its corners
    minus the standard cycle. Keys are basis positions.
    """
    rows: dict[int, dict[int, int]] = {}
    for cid in oa.flipped:
        k = basis.position(BasisElement(BasisKind.CHAMBER, cid))
        row = {basis.position(BasisElement(BasisKind.VERTEX, vid)): 1 for vid in cc.chamber(cid).vertices}
        row[k] = -1
        rows[k] = row
    return rows


def gram_via_flip_oracle(cc: ChamberComplex, standard_gram: GramMatrix, oa: OrientationAssignment) -> GramMatrix:
    """Gram matrix for ``oa`` obtained by base change from the standard Gram.

    Computes ``T G T^t`` where ``T`` is the identity except on the rows of
    flipped chambers.

    Args:
        cc: Chamber complex
        standard_gram: Gram matrix for the all-standard assignment
        oa: Target orientation assignment

    Returns:
        The congruent Gram matrix in the same basis
    """
    basis = standard_gram.basis
    g = standard_gram.rows()
    n = len(g)
    changed = flip_rows(cc, basis, oa)
    tg = [list(r) for r in g]
    for k, row in changed.items():
        tg[k] = [sum(c * g[a][col] for a, c in row.items()) for col in range(n)]
    result = tg
    for i in range(n):
        ri = tg[i]
        updates = {k: sum(c * ri[b] for b, c in row.items()) for k, row in changed.items()}
        for k, value in updates.items():
            result[i][k] = value
    return GramMatrix.from_rows(result, basis)
