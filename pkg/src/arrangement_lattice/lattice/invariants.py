"""Lattice invariants of a Gram matrix.

``compute_invariants`` runs the whole chain: kernel saturation, the
non-degenerate quotient, signature by congruence, a determinant from
python-flint and the Smith normal form taken modulo that determinant,
reconciling them as it goes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import prod

import flint

from arrangement_lattice.errors import CrossCheckError, SingularFormError
from arrangement_lattice.lattice.groups import AbelianGroup
from arrangement_lattice.lattice.inertia import inertia_with_nullity
from arrangement_lattice.lattice.kernel import kernel_saturation, quotient_gram
from arrangement_lattice.lattice.snf import smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeInvariants:
    """Invariants of an integral symmetric form and its non-degenerate quotient.

    Attributes:
        ambient_rank: Size of the Gram matrix
        kernel_rank: Rank of the radical
        nondeg_rank: Rank of the non-degenerate quotient
        signature: (s_plus, s_minus) of the quotient
        disc: Discriminant group of the quotient
        det_abs: |det| of the quotient Gram
        invariant_factors: Full Smith diagonal of the quotient Gram, units included
    """

    ambient_rank: int
    kernel_rank: int
    nondeg_rank: int
    signature: tuple[int, int]
    disc: AbelianGroup
    det_abs: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.ambient_rank != self.kernel_rank + self.nondeg_rank:
            raise CrossCheckError(f"rank bookkeeping failed: {self}")
        if sum(self.signature) != self.nondeg_rank:
            raise CrossCheckError(f"signature {self.signature} does not add up to rank {self.nondeg_rank}")
        if self.disc.order != self.det_abs:
            raise CrossCheckError(f"|disc| = {self.disc.order} but |det| = {self.det_abs}")


def exact_determinant(matrix: list[list[int]]) -> int:
    """Determinant via flint's fraction-free integer arithmetic."""
    if not matrix:
        return 1
    return int(flint.fmpz_mat(matrix).det())


def exact_rank(matrix: list[list[int]]) -> int:
    """Rank via flint."""
    if not matrix:
        return 0
    return int(flint.fmpz_mat(matrix).rank())


def discriminant_group(gram: list[list[int]]) -> AbelianGroup:
    """Discriminant group of a non-degenerate form: the non-unit Smith factors.

    Raises:
        SingularFormError: If the form is degenerate
    """
    det_abs = abs(exact_determinant(gram))
    if det_abs == 0:
        raise SingularFormError(f"form of size {len(gram)} has rank {exact_rank(gram)}")
    snf = smith_normal_form(gram, modulus=det_abs)
    return AbelianGroup(tuple(d for d in snf.invariant_factors if d > 1))


def compute_invariants(gram: list[list[int]]) -> LatticeInvariants:
    """Compute and reconcile the invariants of a symmetric integer form.

    Args:
        gram: Symmetric integer matrix, possibly degenerate

    Returns:
        LatticeInvariants of the form

    Raises:
        CrossCheckError: If independent computations disagree
    """
    n = len(gram)
    sat = kernel_saturation(gram)
    flint_rank = exact_rank(gram)
    if flint_rank != sat.rank:
        raise CrossCheckError(f"saturation rank {sat.rank} but flint rank {flint_rank}")

    positive, negative, nullity = inertia_with_nullity(gram)
    if nullity != sat.kernel_rank:
        raise CrossCheckError(f"congruence nullity {nullity} but kernel rank {sat.kernel_rank}")

    quotient = quotient_gram(sat)
    det_abs = abs(exact_determinant(quotient))
    if det_abs == 0:
        raise CrossCheckError(f"quotient Gram of size {sat.rank} is singular")
    snf = smith_normal_form(quotient, modulus=det_abs)
    if prod(snf.invariant_factors) != det_abs:
        raise CrossCheckError(f"product of invariant factors {prod(snf.invariant_factors)} != |det| {det_abs}")

    invariants = LatticeInvariants(
        ambient_rank=n,
        kernel_rank=sat.kernel_rank,
        nondeg_rank=sat.rank,
        signature=(positive, negative),
        disc=AbelianGroup(tuple(d for d in snf.invariant_factors if d > 1)),
        det_abs=det_abs,
        invariant_factors=snf.invariant_factors,
    )
    logger.info(
        f"Invariants: rank {n}, kernel {sat.kernel_rank}, signature {invariants.signature}, disc {invariants.disc}"
    )
    return invariants
