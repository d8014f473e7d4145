"""Matrices over a division ring and their quasideterminants.

Indices are 1-based throughout, matching the usual ``a_{ij}`` convention.
A quasideterminant that cannot be formed (a singular block or a vanishing
inner quasideterminant) raises :class:`Undefined`; the verification suites
catch it and record the instance instead of failing.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .classical import cofactor_det
from .scalars import Quaternion, invert, is_zero, one_like, zero_like


class Undefined(ArithmeticError):
    """A quasideterminant (or something built from one) does not exist."""

    def __init__(self, message: str, position: Optional[tuple] = None):
        super().__init__(message)
        self.position = position


class Singular(Undefined):
    """No nonzero pivot while inverting a square matrix."""


class SingularMinor(Undefined):
    pass


class IndexOutOfRange(IndexError):
    pass


class DivMatrix:
    """Immutable dense matrix over a (possibly noncommutative) division ring."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self._rows)
        self.ncols = len(self._rows[0]) if self._rows else 0
        if any(len(r) != self.ncols for r in self._rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, like=1) -> "DivMatrix":
        one, zero = one_like(like), zero_like(like)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def random_quaternion(cls, rng: random.Random, n: int, m: Optional[int] = None,
                          lo: int = -9, hi: int = 9) -> "DivMatrix":
        m = n if m is None else m
        return cls([[Quaternion.random(rng, lo, hi) for _ in range(m)] for _ in range(n)])

    @classmethod
    def random_rational(cls, rng: random.Random, n: int, m: Optional[int] = None,
                        lo: int = -9, hi: int = 9) -> "DivMatrix":
        m = n if m is None else m
        return cls([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _check(self, i: int, j: int) -> None:
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexOutOfRange("(%d, %d) outside a %dx%d matrix" % (i, j, self.nrows, self.ncols))

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        self._check(i, j)
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        self._check(i, 1)
        return self._rows[i - 1]

    def col(self, j: int) -> tuple:
        self._check(1, j)
        return tuple(r[j - 1] for r in self._rows)

    def tolist(self) -> List[list]:
        return [list(r) for r in self._rows]

    def keep(self, I: Sequence[int], J: Optional[Sequence[int]] = None) -> "DivMatrix":
        """``A_{I,J}``: rows ``I`` and columns ``J`` in the order given."""
        J = range(1, self.ncols + 1) if J is None else J
        for i in I:
            self._check(i, 1)
        for j in J:
            self._check(1, j)
        return DivMatrix([[self._rows[i - 1][j - 1] for j in J] for i in I])

    def delete(self, I: Iterable[int] = (), J: Iterable[int] = ()) -> "DivMatrix":
        """``A^{I,J}``: drop rows ``I`` and columns ``J``."""
        I, J = set(I), set(J)
        for i in I:
            self._check(i, 1)
        for j in J:
            self._check(1, j)
        rows = [i for i in range(1, self.nrows + 1) if i not in I]
        cols = [j for j in range(1, self.ncols + 1) if j not in J]
        return self.keep(rows, cols)

    def minor(self, i: int, j: int) -> "DivMatrix":
        """``A^{ij}``."""
        return self.delete((i,), (j,))

    def replace_col(self, j: int, values: Sequence) -> "DivMatrix":
        self._check(1, j)
        return DivMatrix([r[:j - 1] + (v,) + r[j:] for r, v in zip(self._rows, values)])

    def replace_row(self, i: int, values: Sequence) -> "DivMatrix":
        self._check(i, 1)
        rows = list(self._rows)
        rows[i - 1] = tuple(values)
        return DivMatrix(rows)

    def __matmul__(self, other: "DivMatrix") -> "DivMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for a, b in zip(r[1:], c[1:]):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return DivMatrix(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DivMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return "DivMatrix(%r)" % (self.tolist(),)


def dr_inverse(A: DivMatrix) -> DivMatrix:
    """Gauss-Jordan inverse using only left multiplication of rows.

    The pivot is the first nonzero entry scanning down the column, which
    keeps the result deterministic without any notion of size.
    """
    if not A.is_square():
        raise ValueError("dr_inverse needs a square matrix, got %s" % (A.shape,))
    n = A.nrows
    if n == 0:
        return A
    sample = A[1, 1]
    one, zero = one_like(sample), zero_like(sample)
    aug = [list(A.row(i + 1)) + [one if i == k else zero for k in range(n)] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if not is_zero(aug[r][c])), None)
        if p is None:
            raise Singular("no nonzero pivot in column %d" % (c + 1), position=(c + 1,))
        aug[c], aug[p] = aug[p], aug[c]
        inv = invert(aug[c][c])
        aug[c] = [inv * x for x in aug[c]]
        pivot_row = aug[c]
        for r in range(n):
            if r == c:
                continue
            f = aug[r][c]
            if is_zero(f):
                continue
            aug[r] = [x - f * y for x, y in zip(aug[r], pivot_row)]
    return DivMatrix([row[n:] for row in aug])


def _border(A: DivMatrix, i: int, j: int):
    a = A[i, j]
    if A.nrows == 1:
        return a
    try:
        inner = dr_inverse(A.minor(i, j))
    except Singular as exc:
        raise Undefined("A^{%d%d} is singular" % (i, j), position=(i, j)) from exc
    xi = [A[i, s] for s in range(1, A.ncols + 1) if s != j]
    zeta = [A[r, j] for r in range(1, A.nrows + 1) if r != i]
    n1 = len(xi)
    corr = None
    for s in range(n1):
        if is_zero(xi[s]):
            continue
        t = inner._rows[s][0] * zeta[0]
        for r in range(1, n1):
            t = t + inner._rows[s][r] * zeta[r]
        t = xi[s] * t
        corr = t if corr is None else corr + t
    return a if corr is None else a - corr


def _recursive(A: DivMatrix, rows: Tuple[int, ...], cols: Tuple[int, ...],
               i: int, j: int, memo: Dict):
    key = (rows, cols, i, j)
    hit = memo.get(key)
    if hit is not None:
        if isinstance(hit, Undefined):
            raise hit
        return hit
    a = A._rows[i][j]
    if len(rows) == 1:
        memo[key] = a
        return a
    sub_rows = tuple(r for r in rows if r != i)
    sub_cols = tuple(c for c in cols if c != j)
    total = a
    try:
        for r in sub_rows:
            for s in sub_cols:
                inv_key = (sub_rows, sub_cols, r, s, "inverse")
                inv = memo.get(inv_key)
                if inv is None:
                    inner = _recursive(A, sub_rows, sub_cols, r, s, memo)
                    if is_zero(inner):
                        raise Undefined("inner quasideterminant at (%d, %d) vanishes" % (r + 1, s + 1),
                                        position=(r + 1, s + 1))
                    inv = memo[inv_key] = invert(inner)
                total = total - A._rows[i][s] * inv * A._rows[r][j]
    except Undefined as exc:
        err = Undefined("|A|_{%d%d} undefined: %s" % (i + 1, j + 1, exc), position=exc.position)
        memo[key] = err
        raise err from exc
    memo[key] = total
    return total


def quasidet(A: DivMatrix, i: int, j: int, method: str = "border", memo: Optional[Dict] = None):
    """The ``(i, j)`` quasideterminant ``|A|_{ij}``.

    ``method="border"`` computes ``a_ij - xi (A^{ij})^{-1} zeta``;
    ``method="recursive"`` expands over the inner quasideterminants of
    ``A^{ij}`` (memoized, so a shared ``memo`` dict can be passed in when
    many positions of the same matrix are needed).
    """
    if not A.is_square():
        raise ValueError("quasideterminants need a square matrix, got %s" % (A.shape,))
    A._check(i, j)
    if method == "border":
        return _border(A, i, j)
    if method == "recursive":
        memo = {} if memo is None else memo
        full = tuple(range(A.nrows))
        return _recursive(A, full, full, i - 1, j - 1, memo)
    raise ValueError("unknown method %r" % method)


class QuasidetCache:
    """Memoized quasideterminants of the square submatrices of one matrix.

    Submatrices are named by the original row and column labels; the result
    does not depend on the order the labels are listed in, so keys are
    sorted.  Undefined results are cached too.
    """

    def __init__(self, A: DivMatrix, method: str = "border"):
        self.A = A
        self.method = method
        self._memo: Dict = {}
        self._rec: Dict = {}

    def get(self, rows: Iterable[int], cols: Iterable[int], i: int, j: int):
        rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
        key = (rows, cols, i, j)
        hit = self._memo.get(key)
        if hit is None:
            try:
                if self.method == "recursive":
                    hit = _recursive(self.A, tuple(r - 1 for r in rows), tuple(c - 1 for c in cols),
                                     i - 1, j - 1, self._rec)
                else:
                    hit = quasidet(self.A.keep(rows, cols), rows.index(i) + 1, cols.index(j) + 1)
            except Undefined as exc:
                hit = exc
            self._memo[key] = hit
        if isinstance(hit, Undefined):
            raise hit
        return hit

    def full(self, i: int, j: int):
        return self.get(range(1, self.A.nrows + 1), range(1, self.A.ncols + 1), i, j)

    def deleted(self, I: Iterable[int], J: Iterable[int], i: int, j: int):
        """Quasideterminant of ``A^{I,J}`` at the labelled position ``(i, j)``."""
        I, J = set(I), set(J)
        rows = [r for r in range(1, self.A.nrows + 1) if r not in I]
        cols = [c for c in range(1, self.A.ncols + 1) if c not in J]
        return self.get(rows, cols, i, j)


def _nonzero_inverse(x, what: str):
    if is_zero(x):
        raise Undefined("%s vanishes and cannot be inverted" % what)
    return invert(x)


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def verify_method_agreement(A: DivMatrix, i: int, j: int, memo: Optional[Dict] = None) -> bool:
    return quasidet(A, i, j, "recursive", memo) == quasidet(A, i, j, "border")


def verify_inversion_law(A: DivMatrix, i: int, j: int, inverse: Optional[DivMatrix] = None,
                         cache: Optional[QuasidetCache] = None) -> bool:
    """``|A|_{ij}^{-1} == (A^{-1})_{ji}`` when both sides exist and are nonzero."""
    try:
        inv = dr_inverse(A) if inverse is None else inverse
    except Singular as exc:
        raise Undefined("A is singular") from exc
    rhs = inv[j, i]
    if is_zero(rhs):
        raise Undefined("(A^-1)_{%d%d} vanishes" % (j, i), position=(i, j))
    qd = cache.full(i, j) if cache is not None else quasidet(A, i, j)
    return _nonzero_inverse(qd, "|A|_{%d%d}" % (i, j)) == rhs


def commutative_ratio_check(A: DivMatrix, i: int, j: int) -> bool:
    """``|A|_{ij} == (-1)^{i+j} det A / det A^{ij}`` for commutative entries."""
    minor_det = cofactor_det(A.minor(i, j).tolist())
    if minor_det == 0:
        raise SingularMinor("det A^{%d%d} = 0" % (i, j), position=(i, j))
    sign = -1 if (i + j) % 2 else 1
    expected = sign * cofactor_det(A.tolist()) * invert(minor_det)
    return quasidet(A, i, j) == expected


def column_permutation(A: DivMatrix, tau: Sequence[int]) -> DivMatrix:
    """``A P_tau``: column ``j`` of ``A`` becomes column ``tau[j-1]``."""
    n = A.ncols
    if sorted(tau) != list(range(1, n + 1)):
        raise ValueError("tau must be a permutation of 1..%d" % n)
    cols = [None] * n
    for j, t in enumerate(tau, start=1):
        cols[t - 1] = A.col(j)
    return DivMatrix(zip(*cols))


def rescale_column(A: DivMatrix, r: int, rho) -> DivMatrix:
    return A.replace_col(r, [x * rho for x in A.col(r)])


def add_column(A: DivMatrix, r: int, s: int, rho) -> DivMatrix:
    """Add column ``r`` (times ``rho`` on the right) to column ``s``."""
    return A.replace_col(s, [y + x * rho for x, y in zip(A.col(r), A.col(s))])


def transformed_matrix(A: DivMatrix, kind: str, *, tau=None, r: Optional[int] = None,
                       s: Optional[int] = None, rho=None) -> DivMatrix:
    if kind == "permute":
        return column_permutation(A, tau)
    if kind == "rescale":
        return rescale_column(A, r, rho)
    if kind == "add":
        return add_column(A, r, s, rho)
    raise ValueError("unknown transform %r" % kind)


def verify_elem_transform(A: DivMatrix, kind: str, i: int, j: int, *, tau=None,
                          r: Optional[int] = None, s: Optional[int] = None, rho=None,
                          cache: Optional[QuasidetCache] = None,
                          cache_b: Optional[QuasidetCache] = None) -> bool:
    """Check one elementary column transformation at position ``(i, j)``.

    kinds: ``"permute"`` (needs ``tau``), ``"rescale"`` (``r``, ``rho``),
    ``"add"`` (``r``, ``s``, ``rho``; asserted for ``j != r`` only).
    ``cache_b``, when given, must hold the transformed matrix.
    """
    if kind == "add" and j == r:
        raise ValueError("the add-to-column rule only covers j != r")
    if kind == "rescale" and j != r and is_zero(rho):
        raise Undefined("rescaling by 0 with j != r")
    base = cache.full(i, j) if cache is not None else quasidet(A, i, j)
    if cache_b is None:
        cache_b = QuasidetCache(transformed_matrix(A, kind, tau=tau, r=r, s=s, rho=rho))
    if kind == "permute":
        return cache_b.full(i, tau[j - 1]) == base
    if kind == "rescale" and j == r:
        return cache_b.full(i, j) == base * rho
    return cache_b.full(i, j) == base


def with_dependent_column(A: DivMatrix, s: int, coeffs: Dict[int, object]) -> DivMatrix:
    """Replace column ``s`` by ``sum_j col_j(A) * coeffs[j]`` over ``j != s``."""
    zero = zero_like(A[1, 1])
    new = []
    for row in range(1, A.nrows + 1):
        acc = zero
        for jj, lam in coeffs.items():
            if jj == s:
                raise ValueError("coefficient on column s itself")
            acc = acc + A[row, jj] * lam
        new.append(acc)
    return A.replace_col(s, new)


def with_dependent_row(A: DivMatrix, s: int, coeffs: Dict[int, object]) -> DivMatrix:
    """Replace row ``s`` by ``sum_i coeffs[i] * row_i(A)`` over ``i != s``."""
    zero = zero_like(A[1, 1])
    new = []
    for col in range(1, A.ncols + 1):
        acc = zero
        for ii, lam in coeffs.items():
            if ii == s:
                raise ValueError("coefficient on row s itself")
            acc = acc + lam * A[ii, col]
        new.append(acc)
    return A.replace_row(s, new)


def verify_dependent_column(A: DivMatrix, s: int, coeffs: Dict[int, object],
                            method: str = "border") -> Tuple[bool, int]:
    """Build the dependent column, then check ``|B|_{rs} == 0`` for every ``r``.

    Returns ``(ok, defined_count)``; undefined positions are skipped.
    """
    B = with_dependent_column(A, s, coeffs)
    ok, defined = True, 0
    for r in range(1, B.nrows + 1):
        try:
            v = quasidet(B, r, s, method)
        except Undefined:
            continue
        defined += 1
        ok &= is_zero(v)
    return ok, defined


def verify_dependent_row(A: DivMatrix, s: int, coeffs: Dict[int, object],
                         method: str = "border") -> Tuple[bool, int]:
    B = with_dependent_row(A, s, coeffs)
    ok, defined = True, 0
    for c in range(1, B.ncols + 1):
        try:
            v = quasidet(B, s, c, method)
        except Undefined:
            continue
        defined += 1
        ok &= is_zero(v)
    return ok, defined


def verify_homological(A: DivMatrix, i: int, j: int, k: int, l: int,
                       cache: Optional[QuasidetCache] = None) -> bool:
    """``-|A^{kj}|_{il}^{-1} |A|_{ij} == |A^{ij}|_{kl}^{-1} |A|_{kj}``."""
    if l == j or i == k:
        raise ValueError("need l != j and i != k")
    cache = cache or QuasidetCache(A)
    lhs = -_nonzero_inverse(cache.deleted((k,), (j,), i, l), "|A^{kj}|_{il}") * cache.full(i, j)
    rhs = _nonzero_inverse(cache.deleted((i,), (j,), k, l), "|A^{ij}|_{kl}") * cache.full(k, j)
    return lhs == rhs


def verify_col_expansion(A: DivMatrix, r: int, s: int, l: int,
                         cache: Optional[QuasidetCache] = None) -> bool:
    """One-column expansion of ``|A|_{rs}`` through column ``l``."""
    if l == s:
        raise ValueError("need l != s")
    cache = cache or QuasidetCache(A)
    rhs = A[r, s]
    for i in range(1, A.nrows + 1):
        if i == r:
            continue
        coef = cache.deleted((i,), (s,), r, l) * _nonzero_inverse(
            cache.deleted((r,), (s,), i, l), "|A^{rs}|_{il}")
        rhs = rhs - coef * A[i, s]
    return cache.full(r, s) == rhs


def verify_row_homological(A: DivMatrix, i: int, j: int, k: int, l: int,
                           cache: Optional[QuasidetCache] = None) -> bool:
    """``|A|_{ij} |A^{il}|_{kj}^{-1} == -|A|_{il} |A^{ij}|_{kl}^{-1}``."""
    if l == j or i == k:
        raise ValueError("need l != j and i != k")
    cache = cache or QuasidetCache(A)
    lhs = cache.full(i, j) * _nonzero_inverse(cache.deleted((i,), (l,), k, j), "|A^{il}|_{kj}")
    rhs = -cache.full(i, l) * _nonzero_inverse(cache.deleted((i,), (j,), k, l), "|A^{ij}|_{kl}")
    return lhs == rhs
