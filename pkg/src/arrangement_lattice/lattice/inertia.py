"""Sylvester inertia of symmetric integer forms by exact congruence.

The form is held as a sparse symmetric dict-of-dicts over ``Fraction`` and
diagonalized by symmetric Gaussian elimination. Each step eliminates a
nonzero diagonal entry whose row has the fewest nonzeros (lowest index on
ties). When every remaining diagonal entry is zero but an off-diagonal entry
``(i, j)`` is not, row and column ``j`` are added to row and column ``i``,
which makes the new diagonal entry ``2 * a_ij`` nonzero.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from arrangement_lattice.errors import SingularFormError

logger = logging.getLogger(__name__)

SparseForm = dict[int, dict[int, Fraction]]


def _to_sparse(matrix: list[list[int]]) -> SparseForm:
    n = len(matrix)
    form: SparseForm = {i: {} for i in range(n)}
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError("inertia needs a square matrix")
        for j, value in enumerate(row):
            if value:
                if matrix[j][i] != value:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
                form[i][j] = Fraction(value)
    return form


def _set(form: SparseForm, i: int, j: int, value: Fraction) -> None:
    if value:
        form[i][j] = value
        form[j][i] = value
    else:
        form[i].pop(j, None)
        form[j].pop(i, None)


def _eliminate(form: SparseForm, k: int) -> Fraction:
    """Remove index k by a congruence; returns its pivot."""
    row = form.pop(k)
    d = row.pop(k)
    neighbours = sorted(row)
    for i in neighbours:
        form[i].pop(k, None)
    for a, i in enumerate(neighbours):
        factor = row[i] / d
        for j in neighbours[a:]:
            _set(form, i, j, form[i].get(j, Fraction(0)) - factor * row[j])
    return d


def _make_pivot(form: SparseForm, i: int) -> None:
    """Add row/column j to row/column i for the smallest neighbour j of i."""
    j = min(form[i])
    ri, rj = form[i], form[j]
    a_ij = ri[j]
    updated = dict(ri)
    for x, value in rj.items():
        if x != i:
            updated[x] = updated.get(x, Fraction(0)) + value
    updated[i] = ri.get(i, Fraction(0)) + 2 * a_ij + rj.get(j, Fraction(0))
    for x in set(ri) | set(updated):
        if x != i:
            _set(form, i, x, updated.get(x, Fraction(0)))
    _set(form, i, i, updated[i])


def inertia_with_nullity(matrix: list[list[int]]) -> tuple[int, int, int]:
    """Numbers of positive, negative and zero squares of a symmetric form.

    Args:
        matrix: Symmetric integer matrix

    Returns:
        (s_plus, s_minus, nullity)
    """
    form = _to_sparse(matrix)
    positive = negative = zero = 0
    while form:
        empty = [i for i, row in form.items() if not row]
        for i in empty:
            del form[i]
            zero += 1
        if not form:
            break
        candidates = [(len(row), i) for i, row in form.items() if i in row]
        if not candidates:
            i = min(form)
            logger.debug(f"No nonzero diagonal left; combining row {i} with {min(form[i])}")
            _make_pivot(form, i)
            continue
        _, k = min(candidates)
        if _eliminate(form, k) > 0:
            positive += 1
        else:
            negative += 1
    return positive, negative, zero


def inertia(matrix: list[list[int]]) -> tuple[int, int]:
    """Signature (s_plus, s_minus) of a non-degenerate symmetric form.

    Raises:
        SingularFormError: If the form is degenerate

    Examples:
        >>> inertia([[-2, 1], [1, -2]])
        (0, 2)
        >>> inertia([[0, 1], [1, 0]])
        (1, 1)
    """
    positive, negative, zero = inertia_with_nullity(matrix)
    if zero:
        raise SingularFormError(f"form is degenerate: nullity {zero}")
    return positive, negative
