"""Closed-form predictions for the lattice of a nodal arrangement.

For N lines with p parallel pairs (every parallel class of size at most 2),
the compactified double cover has a unimodular second homology lattice
whose rank and signature depend only on N, and the curves at infinity span
a sublattice H_inf whose rank, signature and discriminant group depend on
(N, p). The non-degenerate quotient of the affine intersection form is
isomorphic to the orthogonal complement of H_inf, so its predicted rank and
signature are differences of the two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import isqrt

from arrangement_lattice.errors import CrossCheckError
from arrangement_lattice.lattice.groups import AbelianGroup, is_subquotient
from arrangement_lattice.lattice.invariants import LatticeInvariants  # noqa: TC001 - runtime annotation

logger = logging.getLogger(__name__)


def _check_range(n_lines: int, parallel_pairs: int) -> None:
    if n_lines < 3:
        raise ValueError(f"N must be at least 3, got {n_lines}")
    if parallel_pairs < 0 or 2 * parallel_pairs > n_lines:
        raise ValueError(f"p must satisfy 0 <= 2p <= N, got N={n_lines}, p={parallel_pairs}")


def counts(n_lines: int, parallel_pairs: int) -> tuple[int, int]:
    """(bounded chamber count, vertex count) of a nodal arrangement.

    Examples:
        >>> counts(6, 0)
        (10, 15)
        >>> counts(24, 10)
        (243, 266)
    """
    _check_range(n_lines, parallel_pairs)
    chambers = (n_lines - 1) * (n_lines - 2) // 2 - parallel_pairs
    vertices = n_lines * (n_lines - 1) // 2 - parallel_pairs
    return chambers, vertices


def even_degree(n_lines: int) -> int:
    """N rounded up to an even number (the branch curve gains the line at infinity when N is odd)."""
    return n_lines + 1 if n_lines % 2 else n_lines


def ambient(n_lines: int) -> tuple[int, tuple[int, int]]:
    """Rank and signature of the second homology of the compactified cover.

    Examples:
        >>> ambient(6)
        (22, (3, 19))
    """
    if n_lines < 3:
        raise ValueError(f"N must be at least 3, got {n_lines}")
    nt = even_degree(n_lines)
    rank = nt * nt - 3 * nt + 4
    s_plus = nt * nt // 4 - 3 * nt // 2 + 3
    s_minus = 3 * nt * nt // 4 - 3 * nt // 2 + 1
    return rank, (s_plus, s_minus)


def h_infinity(n_lines: int, parallel_pairs: int) -> tuple[int, tuple[int, int], AbelianGroup]:
    """Rank, signature and discriminant group of the lattice spanned by curves at infinity."""
    _check_range(n_lines, parallel_pairs)
    p = parallel_pairs
    if n_lines % 2:
        rank = 1 + n_lines + 2 * p
        disc = AbelianGroup.elementary(2, n_lines - 1)
    elif n_lines != 2 * p:
        rank = 1 + p
        disc = AbelianGroup.elementary(2, p + 1)
    else:
        rank = 2 + p
        disc = AbelianGroup.from_cyclic_orders([2] * (p - 1) + [2 * (p - 1)])
    return rank, (1, rank - 1), disc


def predicted_perp(n_lines: int, parallel_pairs: int) -> tuple[int, tuple[int, int]]:
    """Rank and signature of the orthogonal complement of H_inf.

    Examples:
        >>> predicted_perp(6, 3)
        (17, (2, 15))
    """
    rank, (s_plus, s_minus) = ambient(n_lines)
    h_rank, (h_plus, h_minus), _ = h_infinity(n_lines, parallel_pairs)
    return rank - h_rank, (s_plus - h_plus, s_minus - h_minus)


@dataclass(frozen=True)
class Prediction:
    """Every closed-form value for a given (N, p)."""

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
    h_inf_disc: AbelianGroup
    perp_rank: int
    perp_signature: tuple[int, int]


def predict(n_lines: int, parallel_pairs: int) -> Prediction:
    """Assemble the full prediction for (N, p).

    Raises:
        ValueError: If N < 3 or 2p > N
    """
    chambers, vertices = counts(n_lines, parallel_pairs)
    rank, signature = ambient(n_lines)
    h_rank, h_signature, h_disc = h_infinity(n_lines, parallel_pairs)
    perp_rank, perp_signature = predicted_perp(n_lines, parallel_pairs)
    return Prediction(
        n_lines=n_lines,
        parallel_pairs=parallel_pairs,
        n_tilde=even_degree(n_lines),
        cham_b_count=chambers,
        node_count=vertices,
        h2_rank=(n_lines - 1) ** 2 - 2 * parallel_pairs,
        ambient_rank=rank,
        ambient_signature=signature,
        h_inf_rank=h_rank,
        h_inf_signature=h_signature,
        h_inf_disc=h_disc,
        perp_rank=perp_rank,
        perp_signature=perp_signature,
    )


@dataclass
class CheckReport:
    """Verdicts of comparing computed invariants with a prediction.

    Attributes:
        rank_signature_ok: Quotient rank and signature equal the predicted complement
        subquotient_ok: Computed discriminant group is a sub-quotient of disc(H_inf);
            also requires |disc(H_inf)| / |computed disc| to be a perfect square
        disc_isomorphic: Computed discriminant group equals disc(H_inf); an observation only
        odd_nondegenerate: For odd N, the form has no kernel; None for even N
        h2_rank_ok: Gram size equals (N - 1)^2 - 2p
        index_squared: |disc(H_inf)| / |computed disc| when it divides, else None
        messages: Human-readable notes on every failed verdict
    """

    rank_signature_ok: bool
    subquotient_ok: bool
    disc_isomorphic: bool
    odd_nondegenerate: bool | None
    h2_rank_ok: bool
    index_squared: int | None
    messages: list[str] = field(default_factory=list)

    @property
    def h_inf_primitive(self) -> bool:
        """The discriminant orders agree, so H_inf is primitive in the ambient lattice."""
        return self.index_squared == 1

    @property
    def passed(self) -> bool:
        """All hard verdicts pass; the isomorphism observation never fails a check."""
        return (
            self.rank_signature_ok and self.subquotient_ok and self.odd_nondegenerate is not False and self.h2_rank_ok
        )

    def raise_for_failure(self) -> None:
        """Raise CrossCheckError if a hard verdict failed."""
        if not self.passed:
            raise CrossCheckError("; ".join(self.messages) or "cross-check failed")


def cross_check(
    computed: LatticeInvariants,
    pred: Prediction,
    *,
    n_lines: int,
    parallel_pairs: int,
) -> CheckReport:
    """Compare invariants of a standard Gram with the closed-form prediction.

    Args:
        computed: Invariants of the standard Gram of a nodal arrangement
        pred: Prediction for the same (N, p)
        n_lines: N of the arrangement the invariants came from
        parallel_pairs: p of that arrangement

    Returns:
        CheckReport with every verdict

    Raises:
        ValueError: If (N, p) differ from the prediction's
    """
    if (n_lines, parallel_pairs) != (pred.n_lines, pred.parallel_pairs):
        raise ValueError(
            f"prediction is for (N, p) = ({pred.n_lines}, {pred.parallel_pairs}), "
            f"invariants come from ({n_lines}, {parallel_pairs})"
        )
    messages: list[str] = []

    rank_signature_ok = computed.nondeg_rank == pred.perp_rank and computed.signature == pred.perp_signature
    if not rank_signature_ok:
        messages.append(
            f"quotient rank/signature {computed.nondeg_rank} {computed.signature} "
            f"!= predicted {pred.perp_rank} {pred.perp_signature}"
        )

    index_squared: int | None = None
    h_order, c_order = pred.h_inf_disc.order, computed.disc.order
    if h_order % c_order == 0:
        index_squared = h_order // c_order
    square = index_squared is not None and isqrt(index_squared) ** 2 == index_squared
    subquotient_ok = is_subquotient(computed.disc, pred.h_inf_disc) and square
    if not subquotient_ok:
        messages.append(f"disc {computed.disc} is not a sub-quotient of disc(H_inf) = {pred.h_inf_disc} of square index")

    odd_nondegenerate: bool | None = None
    if n_lines % 2:
        odd_nondegenerate = computed.kernel_rank == 0
        if not odd_nondegenerate:
            messages.append(f"odd N = {n_lines} but kernel rank {computed.kernel_rank}")

    h2_rank_ok = computed.ambient_rank == pred.h2_rank
    if not h2_rank_ok:
        messages.append(f"Gram size {computed.ambient_rank} != (N-1)^2 - 2p = {pred.h2_rank}")

    report = CheckReport(
        rank_signature_ok=rank_signature_ok,
        subquotient_ok=subquotient_ok,
        disc_isomorphic=computed.disc == pred.h_inf_disc,
        odd_nondegenerate=odd_nondegenerate,
        h2_rank_ok=h2_rank_ok,
        index_squared=index_squared,
        messages=messages,
    )
    if report.passed:
        logger.info(f"Cross-check passed for N={n_lines}, p={parallel_pairs}; disc isomorphic: {report.disc_isomorphic}")
    else:
        logger.warning(f"Cross-check failed for N={n_lines}, p={parallel_pairs}: {messages}")
    return report
