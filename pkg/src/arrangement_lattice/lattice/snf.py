"""Smith normal form over the integers.

Pivoting is deterministic: at every step the pivot is an entry of least
absolute value in the remaining block, first in row-major order. Rows and
columns are then reduced Euclid-style until the pivot clears its row and
column and divides every remaining entry. The optional transforms satisfy
``U @ M @ V == D``.

For a square non-singular M the column lattice contains ``|det M| * Z^n``,
so every entry may be reduced modulo any multiple of the determinant without
changing the invariant factors. Passing ``modulus`` does exactly that after
each row or column operation, which bounds every entry by the modulus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

logger = logging.getLogger(__name__)

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """Result of a Smith normal form computation.

    Attributes:
        diagonal: d1 | d2 | ... | dr followed by zeros, length min(rows, cols)
        rank: Number of nonzero diagonal entries
        left: Unimodular U (rows x rows), if requested
        right: Unimodular V (cols x cols), if requested
    """

    diagonal: tuple[int, ...]
    rank: int
    left: tuple[tuple[int, ...], ...] | None = None
    right: tuple[tuple[int, ...], ...] | None = None

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """The nonzero diagonal entries."""
        return self.diagonal[: self.rank]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _symmetric_residue(x: int, modulus: int) -> int:
    r = x % modulus
    return r - modulus if 2 * r > modulus else r


def _find_pivot(a: IntMatrix, t: int) -> tuple[int, int] | None:
    """Least nonzero |entry| in the block a[t:, t:], first in row-major order."""
    for i in range(t, len(a)):
        block = a[i][t:]
        if 1 in block or -1 in block:
            j = min(block.index(v) for v in (1, -1) if v in block)
            return i, t + j
    best: tuple[int, int, int] | None = None
    for i in range(t, len(a)):
        for j, value in enumerate(a[i][t:], start=t):
            if value and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(
    matrix: IntMatrix, *, with_transforms: bool = False, modulus: int | None = None
) -> SmithForm:
    """Compute the Smith normal form of an integer matrix.

    Args:
        matrix: Integer matrix (list of rows); not modified
        with_transforms: Also return unimodular U, V with U @ M @ V = D
        modulus: Positive multiple of ``|det M|`` for a square non-singular M;
            entries are then kept as residues modulo it

    Returns:
        SmithForm with the diagonal and rank

    Raises:
        ValueError: If ``modulus`` is combined with transforms, is not
            positive, or the matrix is not square

    Examples:
        >>> smith_normal_form([[2, 0], [0, 4]]).diagonal
        (2, 4)
        >>> smith_normal_form([[2, 4], [6, 8]]).diagonal
        (2, 4)
        >>> smith_normal_form([[2, 4], [6, 8]], modulus=8).diagonal
        (2, 4)
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if modulus is not None:
        if with_transforms:
            raise ValueError("transforms are not available modulo the determinant")
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        if m != n:
            raise ValueError(f"modular Smith form needs a square matrix, got {m}x{n}")
        a = [[_symmetric_residue(int(x), modulus) for x in row] for row in matrix]
    else:
        a = [[int(x) for x in row] for row in matrix]
    u = _identity(m) if with_transforms else None
    v = _identity(n) if with_transforms else None
    diagonal: list[int] = []

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        if v is not None:
            for row in v:
                row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, q: int, start: int) -> None:
        """row[target] -= q * row[source] from column ``start`` on."""
        rt, rs = a[target], a[source]
        if modulus is None:
            rt[start:] = [x - q * y for x, y in zip(rt[start:], rs[start:], strict=True)]
        else:
            rt[start:] = [_symmetric_residue(x - q * y, modulus) for x, y in zip(rt[start:], rs[start:], strict=True)]
        if u is not None:
            ut, us = u[target], u[source]
            u[target] = [x - q * y for x, y in zip(ut, us, strict=True)]

    def add_col(target: int, source: int, q: int, start: int) -> None:
        """col[target] -= q * col[source] over rows ``start`` on."""
        for row in a[start:]:
            if row[source]:
                value = row[target] - q * row[source]
                row[target] = value if modulus is None else _symmetric_residue(value, modulus)
        if v is not None:
            for row in v:
                if row[source]:
                    row[target] -= q * row[source]

    t = 0
    while t < min(m, n):
        pivot = _find_pivot(a, t)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            settled = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, a[i][t] // a[t][t], t)
                    if a[i][t]:
                        swap_rows(i, t)
                        settled = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, a[t][j] // a[t][t], t)
                    if a[t][j]:
                        swap_cols(j, t)
                        settled = False
            if not settled:
                continue
            d = a[t][t]
            if abs(d) == 1:
                break
            offender = next((r for r in range(t + 1, m) if any(x % d for x in a[r][t + 1 :])), None)
            if offender is None:
                break
            # pulls a non-multiple into row t; the next sweep shrinks the pivot
            add_row(t, offender, -1, t)
        if modulus is not None:
            diagonal.append(gcd(a[t][t], modulus))
        else:
            if a[t][t] < 0:
                a[t][t] = -a[t][t]
                if u is not None:
                    u[t] = [-x for x in u[t]]
            diagonal.append(a[t][t])
        t += 1

    if modulus is not None:
        # a block that vanishes modulo the modulus contributes gcd(0, modulus)
        diagonal.extend([modulus] * (n - len(diagonal)))
    rank = sum(1 for d in diagonal if d)
    diagonal.extend([0] * (min(m, n) - len(diagonal)))
    logger.debug(f"Smith normal form of {m}x{n} matrix: rank {rank}")
    return SmithForm(
        diagonal=tuple(diagonal),
        rank=rank,
        left=None if u is None else tuple(tuple(r) for r in u),
        right=None if v is None else tuple(tuple(r) for r in v),
    )


def invariant_factors(matrix: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith normal form."""
    return smith_normal_form(matrix).invariant_factors
