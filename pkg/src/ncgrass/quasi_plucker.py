"""Right quasi-Plücker coordinates of an ``n x d`` matrix over a division ring.

``r_{ji}^M(A) = |A_{j M}|_{j s} * |A_{i M}|_{i s}^{-1}`` where ``A_{j M}`` stacks
row ``j`` on top of the rows ``M`` (in the order given) and the
quasideterminants are taken at that first row and column ``s``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .quasidet import DivMatrix, QuasidetCache, Singular, Undefined, dr_inverse, quasidet
from .scalars import invert, is_zero, one_like, zero_like


class CoordinateCache:
    """Memoizes the top-row quasideterminants behind many coordinates of one ``A``.

    When the rows after the first are increasing, the value comes from a
    recursive cache shared by all square submatrices of ``A``.  Any other
    row order is computed from scratch on the reordered submatrix, so
    comparing the two is a real check of order independence.
    """

    def __init__(self, A: DivMatrix):
        self.A = A
        self._memo: Dict = {}
        self._shared = QuasidetCache(A, "recursive")

    def top_quasidet(self, rows: Tuple[int, ...], s: int):
        key = (rows, s)
        hit = self._memo.get(key)
        if hit is None:
            try:
                rest = rows[1:]
                if all(rest[k] < rest[k + 1] for k in range(len(rest) - 1)) and rows[0] not in rest:
                    hit = self._shared.get(rows, range(1, self.A.ncols + 1), rows[0], s)
                else:
                    hit = quasidet(self.A.keep(rows), 1, s)
            except Undefined as exc:
                hit = exc
            self._memo[key] = hit
        if isinstance(hit, Undefined):
            raise hit
        return hit


def _check_args(A: DivMatrix, j: int, i: int, M: Sequence[int], s: int) -> None:
    n, d = A.shape
    if len(M) != d - 1:
        raise ValueError("|M| must be d-1 = %d, got %r" % (d - 1, tuple(M)))
    if i in M:
        raise ValueError("i=%d must not lie in M=%r" % (i, tuple(M)))
    if not 1 <= s <= d:
        raise ValueError("column s=%d out of range" % s)
    if not (1 <= i <= n and 1 <= j <= n and all(1 <= m <= n for m in M)):
        raise ValueError("row index out of range")


def qp_coord(A: DivMatrix, j: int, i: int, M: Sequence[int], s: int = 1,
             cache: Optional[CoordinateCache] = None):
    """The quasi-Plücker coordinate ``r_{ji}^M(A)`` computed through column ``s``."""
    M = tuple(M)
    _check_args(A, j, i, M, s)
    cache = cache or CoordinateCache(A)
    num = cache.top_quasidet((j,) + M, s)
    den = cache.top_quasidet((i,) + M, s)
    if is_zero(den):
        raise Undefined("|A_{%d,%r}|_{%d,%d} vanishes" % (i, M, i, s), position=(i, s))
    return num * invert(den)


def verify_s_independence(A: DivMatrix, j: int, i: int, M: Sequence[int],
                          cache: Optional[CoordinateCache] = None) -> bool:
    cache = cache or CoordinateCache(A)
    values = [qp_coord(A, j, i, M, s, cache) for s in range(1, A.ncols + 1)]
    return all(v == values[0] for v in values[1:])


def verify_gl_invariance(A: DivMatrix, g: DivMatrix, j: int, i: int, M: Sequence[int],
                         cache: Optional[CoordinateCache] = None,
                         cache_g: Optional[CoordinateCache] = None,
                         g_checked: bool = False) -> bool:
    """``r_{ji}^M(A g) == r_{ji}^M(A)``; a singular ``g`` is rejected.

    Pass ``g_checked=True`` when the caller has already inverted ``g``.
    """
    if not g_checked:
        dr_inverse(g)  # raises Singular
    Ag = cache_g.A if cache_g is not None else A @ g
    return qp_coord(Ag, j, i, M, 1, cache_g) == qp_coord(A, j, i, M, 1, cache)


def _tally(report: Dict[str, List[int]], name: str, check: Callable[[], bool]) -> None:
    counts = report.setdefault(name, [0, 0, 0])  # pass, fail, undefined
    try:
        ok = check()
    except Undefined:
        counts[2] += 1
        return
    counts[0 if ok else 1] += 1


def verify_qp_properties(A: DivMatrix, cache: Optional[CoordinateCache] = None,
                         max_orderings: int = 6) -> Dict[str, List[int]]:
    """Sweep the four structural properties over every admissible index choice.

    Returns ``{property: [passed, failed, undefined]}`` with properties
    ``m_order``, ``j_in_m``, ``j_eq_i``, ``cocycle``, ``inverse_pair`` and
    ``triple_product``.
    """
    n, d = A.shape
    cache = cache or CoordinateCache(A)
    report: Dict[str, List[int]] = {}
    last: Dict[Tuple[int, ...], object] = {}
    one = one_like(A[1, 1])
    rows = range(1, n + 1)
    for M in itertools.combinations(rows, d - 1):
        outside = [x for x in rows if x not in M]
        for i in outside:
            for j in rows:
                base = lambda j=j, i=i, M=M: qp_coord(A, j, i, M, 1, cache)
                # (a) reorder M, and also put row j last instead of first
                for perm in itertools.islice(itertools.permutations(M), 1, max_orderings):
                    _tally(report, "m_order",
                           lambda perm=perm, base=base, j=j, i=i: qp_coord(A, j, i, perm, 1, cache) == base())
                if d > 1 and j not in M:
                    _tally(report, "m_order",
                           lambda base=base, j=j, i=i, M=M: _row_last_coord(A, j, i, M, last) == base())
                # (b)
                if j in M:
                    _tally(report, "j_in_m", lambda base=base: is_zero(base()))
                if j == i:
                    _tally(report, "j_eq_i", lambda base=base: base() == one)
                # (c)
                for l in outside:
                    _tally(report, "cocycle",
                           lambda base=base, i=i, l=l, j=j, M=M:
                           base() * qp_coord(A, i, l, M, 1, cache) == qp_coord(A, j, l, M, 1, cache))
                if j not in M:
                    _tally(report, "inverse_pair",
                           lambda base=base, i=i, j=j, M=M: base() * qp_coord(A, i, j, M, 1, cache) == one)
    # (d) M of size d-2, distinct i, j, l outside it
    if d >= 2:
        for M in itertools.combinations(rows, d - 2):
            outside = [x for x in rows if x not in M]
            for i, j, l in itertools.permutations(outside, 3):
                _tally(report, "triple_product",
                       lambda i=i, j=j, l=l, M=M: triple_product(A, i, j, l, M, cache) == -one)
    return report


def _row_last_coord(A: DivMatrix, j: int, i: int, M: Sequence[int], memo: Optional[Dict] = None):
    """Same coordinate with the distinguished row stacked last."""
    d = A.ncols
    memo = {} if memo is None else memo

    def top(rows):
        if rows not in memo:
            memo[rows] = quasidet(A.keep(rows), d, 1)
        return memo[rows]

    num = top(tuple(M) + (j,))
    den = top(tuple(M) + (i,))
    if is_zero(den):
        raise Undefined("denominator vanishes")
    return num * invert(den)


def triple_product(A: DivMatrix, i: int, j: int, l: int, M: Sequence[int],
                   cache: Optional[CoordinateCache] = None):
    """``r_{ij}^{M l} r_{jl}^{M i} r_{li}^{M j}`` (expected ``-1``)."""
    cache = cache or CoordinateCache(A)
    M = tuple(M)
    srt = lambda extra: tuple(sorted(M + (extra,)))
    return (qp_coord(A, i, j, srt(l), 1, cache) * qp_coord(A, j, l, srt(i), 1, cache)
            * qp_coord(A, l, i, srt(j), 1, cache))


def verify_qp_relation(A: DivMatrix, i: int, L: Sequence[int], M: Sequence[int],
                       cache: Optional[CoordinateCache] = None):
    """Return ``sum_{j in L} r_{ij}^{L - j} r_{ji}^M``; the relation says this is 1."""
    n, d = A.shape
    L, M = tuple(sorted(L)), tuple(sorted(M))
    if len(L) != d or len(M) != d - 1 or i in M:
        raise ValueError("need |L| = d, |M| = d-1 and i not in M")
    cache = cache or CoordinateCache(A)
    total = zero_like(A[1, 1])
    for j in L:
        rest = tuple(x for x in L if x != j)
        total = total + qp_coord(A, i, j, rest, 1, cache) * qp_coord(A, j, i, M, 1, cache)
    return total


def normalize_columns(A: DivMatrix) -> DivMatrix:
    """``A B^{-1}`` with ``B`` the top ``d x d`` block, so the top block becomes the identity."""
    n, d = A.shape
    try:
        Binv = dr_inverse(A.keep(range(1, d + 1)))
    except Singular as exc:
        raise Singular("top %dx%d block is singular" % (d, d)) from exc
    return A @ Binv


# Candidate readings of the entries below the identity block.  The displayed
# formula swaps the roles of row and column, so each reading is tested.
NORMALIZATION_CONVENTIONS = {
    "C[j,k] = r_{jk}^{[d]-k}": lambda A, j, k, d: qp_coord(A, j, k, _drop(d, k)),
    "C[j,k] = r_{kj}^{[d]-k}": lambda A, j, k, d: qp_coord(A, k, j, _drop(d, k)),
    "C[j,k] = r_{jk}^{[d]-j}": lambda A, j, k, d: qp_coord(A, j, k, _drop(d, j)) if j <= d else None,
}


def _drop(d: int, k: int) -> Tuple[int, ...]:
    return tuple(x for x in range(1, d + 1) if x != k)


def normalization_convention(A: DivMatrix) -> List[str]:
    """Names of the conventions that reproduce every entry of ``normalize_columns(A)``."""
    n, d = A.shape
    C = normalize_columns(A)
    matches = []
    for name, rule in NORMALIZATION_CONVENTIONS.items():
        ok = True
        for j in range(d + 1, n + 1):
            for k in range(1, d + 1):
                try:
                    v = rule(A, j, k, d)
                except (Undefined, ValueError):
                    v = None
                if v is None or v != C[j, k]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            matches.append(name)
    return matches
