"""Commutative determinant oracles.

These routines only need ``+``, ``-`` and ``*`` on the entries, so they run
on rationals and on commutative polynomials alike.  They never touch the
quasideterminant code and serve as its independent check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

from .combinatorics import subsets, tuple_length


def cofactor_det(M: Sequence[Sequence], zero=0):
    """Determinant by cofactor expansion along the first remaining row."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(row) != n for row in M):
        raise ValueError("cofactor_det needs a square matrix")

    @lru_cache(maxsize=None)
    def det(row: int, cols: Tuple[int, ...]):
        if len(cols) == 1:
            return M[row][cols[0]]
        total = zero
        for k, c in enumerate(cols):
            minor = det(row + 1, cols[:k] + cols[k + 1:])
            term = M[row][c] * minor
            total = total - term if k % 2 else total + term
        return total

    return det(0, tuple(range(n)))


def submatrix(M: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> List[list]:
    """Rows/cols are 1-based and kept in the given order."""
    return [[M[r - 1][c - 1] for c in cols] for r in rows]


def laplace_expansion(M: Sequence[Sequence], p: int, J: Sequence[int],
                      det: Callable = cofactor_det, zero=0):
    """Generalized Laplace expansion down the columns ``J[:p]``.

    ``J`` is any ordering of the columns.  Each block minor keeps its columns
    in the order ``J`` lists them; the overall sign is ``(-1)**l(J)``.
    """
    m = len(M)
    if sorted(J) != list(range(1, m + 1)):
        raise ValueError("J must be an ordering of 1..%d" % m)
    if not 0 < p < m:
        raise ValueError("need 0 < p < m")
    left_cols, right_cols = tuple(J[:p]), tuple(J[p:])
    total = zero
    for rows in subsets(range(1, m + 1), p):
        rest = tuple(i for i in range(1, m + 1) if i not in rows)
        sign = -1 if tuple_length(rows + rest) % 2 else 1
        term = det(submatrix(M, rows, left_cols)) * det(submatrix(M, rest, right_cols))
        total = total + term if sign > 0 else total - term
    return -total if tuple_length(J) % 2 else total
