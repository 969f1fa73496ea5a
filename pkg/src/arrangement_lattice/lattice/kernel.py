"""Saturated kernel of a symmetric integer form and a complementary basis.

The rational kernel comes from flint's ``nullspace`` with each vector made
primitive. If the kernel rows can be brought, by integer row operations, to
a form with an identity block on some coordinate set S, the rows already
span the saturated kernel and the unit vectors ``e_j`` with j outside S
complete them to a basis of Z^n. The quotient Gram is then the principal
submatrix of ``G`` on those coordinates, with entries as small as ``G``'s.
This is the common case, and with an empty kernel it returns ``G`` itself.

Otherwise a Hermite-style column reduction ``K @ W = [H | 0]`` with W
unimodular saturates the kernel: the first rows of ``W^-1`` span it and the
remaining rows complete the basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

import flint

logger = logging.getLogger(__name__)

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class KernelSaturation:
    """Kernel and complement bases of a symmetric integer form.

    Attributes:
        kernel: Rows spanning the saturated kernel
        complement: Rows completing ``kernel`` to a basis of Z^n
        images: ``complement[i] @ G`` for every complement row
        principal: Coordinates of the complement when it consists of unit
            vectors, else None
    """

    kernel: tuple[tuple[int, ...], ...]
    complement: tuple[tuple[int, ...], ...]
    images: tuple[tuple[int, ...], ...]
    principal: tuple[int, ...] | None = None

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel)

    @property
    def rank(self) -> int:
        return len(self.complement)

    @property
    def ambient_rank(self) -> int:
        return self.kernel_rank + self.rank


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    return [x // g for x in row] if g > 1 else row


def rational_kernel(gram: IntMatrix) -> IntMatrix:
    """Primitive integer vectors spanning the kernel of ``gram`` over Q."""
    if not gram:
        return []
    null, nullity = flint.fmpz_mat(gram).nullspace()
    columns = null.transpose().table()[: int(nullity)]
    return [_primitive([int(x) for x in col]) for col in columns if any(col)]


def _unit_pivots(kernel: IntMatrix) -> tuple[IntMatrix, list[int]] | None:
    """Row-reduce ``kernel`` on +-1 pivots; None if some row has no unit left.

    On success ``rows[r][pivots[s]]`` is +-1 when r == s and 0 otherwise.
    """
    rows = [list(r) for r in kernel]
    pivots: list[int] = []
    for r, row in enumerate(rows):
        c = next((j for j, x in enumerate(row) if abs(x) == 1 and j not in pivots), None)
        if c is None:
            return None
        s = row[c]
        for o, other in enumerate(rows):
            if o != r and other[c]:
                f = other[c] * s
                rows[o] = [x - f * y for x, y in zip(other, row, strict=True)]
        pivots.append(c)
    return rows, pivots


def _hermite_saturation(kernel: IntMatrix, n: int) -> tuple[IntMatrix, IntMatrix]:
    """Saturate by column reduction; returns (kernel rows, complement rows)."""
    k = len(kernel)
    a = [list(r) for r in kernel]
    w_inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(k):
        while True:
            live = [j for j in range(i, n) if a[i][j]]
            p = min(live, key=lambda j: (abs(a[i][j]), j))
            if p != i:
                for row in a:
                    row[i], row[p] = row[p], row[i]
                w_inv[i], w_inv[p] = w_inv[p], w_inv[i]
            pivot = a[i][i]
            for j in range(i + 1, n):
                if a[i][j]:
                    q = a[i][j] // pivot
                    for row in a[i:]:
                        row[j] -= q * row[i]
                    # column op col_j -= q col_i is row op row_i += q row_j on W^-1
                    w_inv[i] = [x + q * y for x, y in zip(w_inv[i], w_inv[j], strict=True)]
            if not any(a[i][i + 1 :]):
                break
    return w_inv[:k], w_inv[k:]


def _images(rows: IntMatrix, gram: IntMatrix) -> list[tuple[int, ...]]:
    n = len(gram)
    out = []
    for row in rows:
        image = [0] * n
        for idx, coeff in enumerate(row):
            if coeff:
                image = [x + coeff * y for x, y in zip(image, gram[idx], strict=True)]
        out.append(tuple(image))
    return out


def kernel_saturation(gram: IntMatrix) -> KernelSaturation:
    """Split Z^n into the saturated kernel of ``gram`` and a complement.

    Args:
        gram: Symmetric integer matrix

    Returns:
        KernelSaturation with kernel, complement and complement images

    Examples:
        >>> kernel_saturation([[0]]).kernel
        ((1,),)
        >>> kernel_saturation([[1, 1], [1, 1]]).principal
        (1,)
    """
    n = len(gram)
    g = [[int(x) for x in row] for row in gram]
    kernel = rational_kernel(g)
    reduced = _unit_pivots(kernel)
    if reduced is None:
        logger.debug(f"Kernel of {n}x{n} form has no unit pivots; saturating by column reduction")
        kernel, complement = _hermite_saturation(kernel, n)
        reduced = _unit_pivots(kernel)
    if reduced is not None:
        kernel, pivots = reduced
        principal = tuple(j for j in range(n) if j not in set(pivots))
        complement = [[int(i == j) for i in range(n)] for j in principal]
        images = [tuple(g[j]) for j in principal]
    else:
        principal = None
        images = _images(complement, g)
    logger.debug(f"Kernel saturation of {n}x{n} form: rank {n - len(kernel)}, kernel rank {len(kernel)}")
    return KernelSaturation(
        kernel=tuple(tuple(row) for row in kernel),
        complement=tuple(tuple(row) for row in complement),
        images=tuple(images),
        principal=principal,
    )


def quotient_gram(sat: KernelSaturation) -> IntMatrix:
    """Gram matrix of the form restricted to the complement basis.

    The form is symmetric, so only the upper triangle is computed. A unit
    vector complement reads the entries straight off the images.
    """
    r = sat.rank
    supports = [[(idx, x) for idx, x in enumerate(row) if x] for row in sat.complement]
    out = [[0] * r for _ in range(r)]
    for i, image in enumerate(sat.images):
        for j in range(i, r):
            value = sum(image[idx] * x for idx, x in supports[j])
            out[i][j] = value
            out[j][i] = value
    return out
