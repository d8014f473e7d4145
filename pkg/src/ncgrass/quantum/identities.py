"""Exact checks of quantum determinant and quantum minor identities.

Every ``verify_*`` function checks one instance and returns a bool.  All
comparisons are structural equality of PBW normal forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..classical import cofactor_det, laplace_expansion
from ..combinatorics import tuple_length
from ..scalars import LaurentPoly
from .algebra import AlgebraContext, CommPoly, NCPoly, commutative_generic_matrix, specialize_q1
from .minors import (
    MinorRatioWord,
    MinorSymbol,
    NoCommutationCertificate,
    RatioEquation,
    ShapeMismatch,
    canonical_minor_poly,
    find_q_exponent,
    minus_q,
    q_commute_exponent,
    qdet,
    qdet_of_matrix,
)

Q = LaurentPoly.q()


def _full(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


def det_q(ctx: AlgebraContext, block: int = 0) -> NCPoly:
    if ctx.n != ctx.m:
        raise ShapeMismatch("det_q needs a square context")
    return qdet(ctx, _full(ctx.n), _full(ctx.n), block)


# ---------------------------------------------------------------------------
# determinant kernel
# ---------------------------------------------------------------------------


def verify_q_alternating(ctx: AlgebraContext, rows: Sequence[int]) -> bool:
    rows = tuple(rows)
    lhs = qdet(ctx, rows, _full(len(rows)))
    if len(set(rows)) != len(rows):
        return lhs.is_zero()
    return lhs == qdet(ctx, tuple(sorted(rows)), _full(len(rows))).scale(minus_q(-tuple_length(rows)))


def verify_centrality(ctx: AlgebraContext) -> bool:
    D = det_q(ctx)
    return all(D * ctx.x(i, j) == ctx.x(i, j) * D
               for i in range(1, ctx.n + 1) for j in range(1, ctx.m + 1))


def antipode_of(ctx: AlgebraContext, rows: Sequence[int], cols: Sequence[int]) -> List[List[NCPoly]]:
    """``S(Y)[a][b] = (-q)^(b-a) det_q Y^{ba}`` for ``Y = X[rows, cols]`` (0-based lists)."""
    rows, cols = tuple(rows), tuple(cols)
    k = len(rows)
    out = []
    for a in range(k):
        line = []
        for b in range(k):
            sub_rows = rows[:b] + rows[b + 1:]
            sub_cols = cols[:a] + cols[a + 1:]
            line.append(qdet(ctx, sub_rows, sub_cols).scale(minus_q(b - a)))
        out.append(line)
    return out


def antipode(ctx: AlgebraContext) -> List[List[NCPoly]]:
    return antipode_of(ctx, _full(ctx.n), _full(ctx.m))


def _entries(ctx: AlgebraContext, rows, cols, block: int = 0) -> List[List[NCPoly]]:
    return [[ctx.x(r, c, block) for c in cols] for r in rows]


def matmul(A: Sequence[Sequence[NCPoly]], B: Sequence[Sequence[NCPoly]]) -> List[List[NCPoly]]:
    ctx = A[0][0].ctx
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), ctx.zero())
             for j in range(len(B[0]))] for i in range(len(A))]


def _is_scalar_matrix(M: Sequence[Sequence[NCPoly]], diag: NCPoly) -> bool:
    return all(M[i][j] == (diag if i == j else diag.ctx.zero())
               for i in range(len(M)) for j in range(len(M)))


def verify_antipode(ctx: AlgebraContext) -> bool:
    X = _entries(ctx, _full(ctx.n), _full(ctx.m))
    S = antipode(ctx)
    D = det_q(ctx)
    return _is_scalar_matrix(matmul(S, X), D) and _is_scalar_matrix(matmul(X, S), D)


def q_generic_violations(M: Sequence[Sequence[NCPoly]], power: int = 1) -> List[Tuple]:
    """Relations of the four q-generic types (with ``q`` replaced by ``q^power``) that fail."""
    n, m = len(M), len(M[0])
    qq = LaurentPoly.monomial(power)
    bad: List[Tuple] = []
    for k in range(n):
        for i, j in itertools.combinations(range(m), 2):
            if M[k][j] * M[k][i] != (M[k][i] * M[k][j]).scale(qq):
                bad.append(("row", k + 1, i + 1, j + 1))
    for k in range(m):
        for i, j in itertools.combinations(range(n), 2):
            if M[j][k] * M[i][k] != (M[i][k] * M[j][k]).scale(qq):
                bad.append(("column", i + 1, j + 1, k + 1))
    for i, j in itertools.combinations(range(n), 2):
        for k, l in itertools.combinations(range(m), 2):
            if M[j][k] * M[i][l] != M[i][l] * M[j][k]:
                bad.append(("commute", i + 1, j + 1, k + 1, l + 1))
            rhs = M[i][k] * M[j][l] + (M[i][l] * M[j][k]).scale(qq - qq.inverse())
            if M[j][l] * M[i][k] != rhs:
                bad.append(("cross", i + 1, j + 1, k + 1, l + 1))
    return bad


def verify_inverse_genericity(ctx: AlgebraContext) -> bool:
    return not q_generic_violations(antipode(ctx), power=-1)


def verify_multiplicativity(n: int) -> bool:
    ctx = AlgebraContext(n, n, blocks=2)
    X = _entries(ctx, _full(n), _full(n), 0)
    Y = _entries(ctx, _full(n), _full(n), 1)
    Z = matmul(X, Y)
    if q_generic_violations(Z):
        return False
    return qdet_of_matrix(Z) == det_q(ctx, 0) * det_q(ctx, 1)


# ---------------------------------------------------------------------------
# minors of an n x d matrix
# ---------------------------------------------------------------------------


def verify_weak_qcommute(ctx: AlgebraContext, i: int, j: int, M: Sequence[int]) -> bool:
    M = tuple(M)
    if i in M or j in M or not i < j:
        raise ValueError("need i < j and both outside M")
    a = canonical_minor_poly(ctx, (i,) + M)
    b = canonical_minor_poly(ctx, (j,) + M)
    return b * a == (a * b).shift(1)


def verify_last_minor_commutation(ctx: AlgebraContext, d: int, n: int, I: Sequence[int]) -> bool:
    I = tuple(sorted(I))
    if len(I) != d:
        raise ValueError("|I| must equal d")
    last = tuple(range(n - d + 1, n + 1))
    f_last, f_I = qdet(ctx, last, _full(d)), qdet(ctx, I, _full(d))
    return f_last * f_I == (f_I * f_last).shift(len(set(last) - set(I)))


def young_terms(r: int, I: Sequence[int], J: Sequence[int]) -> List[Tuple[LaurentPoly, Tuple[int, ...], Tuple[int, ...]]]:
    """Terms ``(coefficient, I minus Lambda, Lambda | J)`` of the size-``r`` symmetry sum.

    ``Lambda`` ranges over position subsets of ``I`` so repeated indices are allowed.
    """
    I, J = tuple(I), tuple(J)
    out = []
    for pos in itertools.combinations(range(len(I)), r):
        lam = tuple(I[p] for p in pos)
        rest = tuple(I[p] for p in range(len(I)) if p not in pos)
        out.append((minus_q(-tuple_length(rest + lam)), rest, lam + J))
    return out


def young_sum(ctx: AlgebraContext, r: int, I: Sequence[int], J: Sequence[int]) -> NCPoly:
    total = ctx.zero()
    for c, A, B in young_terms(r, I, J):
        total = total + (canonical_minor_poly(ctx, A) * canonical_minor_poly(ctx, B)).scale(c)
    return total


def verify_young_symmetry(ctx: AlgebraContext, d: int, r: int, I: Sequence[int], J: Sequence[int]) -> bool:
    if len(I) != d + r or len(J) != d - r or not 1 <= r <= d:
        raise ValueError("need |I| = d+r, |J| = d-r and 1 <= r <= d")
    return young_sum(ctx, r, I, J).is_zero()


def young_relation_at_q1(r: int, I: Sequence[int], J: Sequence[int]) -> str:
    """The classical relation, e.g. ``p12p34 - p13p24 + p23p14``.

    Minors are sorted with their sign and vanishing ones dropped; terms are
    listed by their first minor.
    """
    terms = []
    for c, A, B in young_terms(r, I, J):
        sign = c.eval(1)
        if len(set(A)) != len(A) or len(set(B)) != len(B):
            continue
        sign *= (-1) ** tuple_length(A) * (-1) ** tuple_length(B)
        terms.append((tuple(sorted(A)), tuple(sorted(B)), sign))
    terms.sort()
    text = ""
    for A, B, sign in terms:
        body = "p%sp%s" % ("".join(map(str, A)), "".join(map(str, B)))
        if not text:
            text = ("-" if sign < 0 else "") + body
        else:
            text += (" - " if sign < 0 else " + ") + body
    return text or "0"


def reduction_sides(ctx: AlgebraContext, r: int, I: Sequence[int], J: Sequence[int]) -> Tuple[NCPoly, NCPoly]:
    """Both sides of the rewriting of the size-``r`` sum through size ``r-1`` sums."""
    I, J = tuple(sorted(I)), tuple(J)
    lhs = ctx.zero()
    for s in range(len(I)):
        i_s, I_s = I[s], I[:s] + I[s + 1:]
        outer = minus_q(2 * (r - 1) - tuple_length(I_s + (i_s,)))
        for c, A, B in young_terms(r - 1, I_s, (i_s,) + J):
            lhs = lhs + (canonical_minor_poly(ctx, A) * canonical_minor_poly(ctx, B)).scale(outer * c)
    geometric = sum((minus_q(2 * t) for t in range(r)), LaurentPoly())
    return lhs, young_sum(ctx, r, I, J).scale(geometric)


def reduction_scalar_identity(I: Sequence[int], lam: Sequence[int]) -> bool:
    """Coefficient bookkeeping for one ``Lambda``: both exponent forms and the final sum."""
    I, lam = tuple(sorted(I)), tuple(sorted(lam))
    r = len(lam)
    rest = tuple(x for x in I if x not in lam)
    total = LaurentPoly()
    for i_s in lam:
        lam_s = tuple(x for x in lam if x != i_s)
        I_s = tuple(x for x in I if x != i_s)
        # exponent bookkeeping used to compare coefficients
        if tuple_length(rest + lam) != (tuple_length(rest + lam_s) + tuple_length(I_s + (i_s,))
                                        - tuple_length(lam_s + (i_s,))):
            return False
        total = total + minus_q(2 * (r - 1) - 2 * tuple_length(lam_s + (i_s,)))
    return total == sum((minus_q(2 * t) for t in range(r)), LaurentPoly())


def verify_reduction(ctx: AlgebraContext, d: int, r: int, I: Sequence[int], J: Sequence[int]) -> bool:
    if len(I) != d + r or len(J) != d - r or r < 1:
        raise ValueError("need |I| = d+r, |J| = d-r and r >= 1")
    lhs, rhs = reduction_sides(ctx, r, I, J)
    if lhs != rhs:
        return False
    return all(reduction_scalar_identity(I, lam) for lam in itertools.combinations(sorted(I), r))


# ---------------------------------------------------------------------------
# quasideterminants of q-generic matrices, by denominator clearing
# ---------------------------------------------------------------------------


@dataclass
class ClearedQuasidet:
    """``|Y|_{ij} * D = value`` (side ``right``) or ``D * |Y|_{ij} = value`` (side ``left``).

    ``D`` is the quantum minor of ``Y`` with row ``i`` and column ``j`` removed.
    """

    side: str
    D: MinorSymbol
    value: NCPoly
    certificates: Tuple[int, ...]


def clear_quasidet(ctx: AlgebraContext, rows: Sequence[int], cols: Sequence[int],
                   p: int, s: int, side: str = "right") -> ClearedQuasidet:
    """Clear the inverse in ``|Y|_{ps} = y_ps - xi G^-1 zeta`` for ``Y = X[rows, cols]``.

    ``p`` and ``s`` are 1-based positions inside ``rows`` and ``cols``.  The
    other rows and columns are sorted (the quasideterminant does not depend
    on their order) and must be distinct.  ``G^-1`` is replaced by
    ``S(G) D^-1`` (right) or ``D^-1 S(G)`` (left), and ``D`` is moved next
    to its inverse using certificates found by brute force.
    """
    rows, cols = tuple(rows), tuple(cols)
    i, j = rows[p - 1], cols[s - 1]
    R = tuple(sorted(rows[:p - 1] + rows[p:]))
    C = tuple(sorted(cols[:s - 1] + cols[s:]))
    if len(set(R)) != len(R) or len(set(C)) != len(C):
        raise ShapeMismatch("the complementary block has a repeated row or column")
    D_sym = MinorSymbol(R, C if R else None)
    D = qdet(ctx, R, C)
    y = ctx.x(i, j)
    if not R:
        return ClearedQuasidet(side, D_sym, y, ())
    S = antipode_of(ctx, R, C)
    xi = [ctx.x(i, c) for c in C]
    zeta = [ctx.x(r, j) for r in R]
    window = 2 * len(R) * ctx.n
    certs = []
    if side == "right":
        for z in zeta:  # z D = q^b D z
            b = find_q_exponent(D, z, window)
            if b is None:
                raise NoCommutationCertificate("no b with %s D = q^b D %s" % (z.dump(), z.dump()))
            certs.append(b)
        value = y * D
        for a in range(len(R)):
            for bb in range(len(R)):
                value = value - (xi[a] * S[a][bb] * zeta[bb]).shift(certs[bb])
    elif side == "left":
        for x in xi:  # D x = q^b x D
            b = find_q_exponent(x, D, window)
            if b is None:
                raise NoCommutationCertificate("no b with D %s = q^b %s D" % (x.dump(), x.dump()))
            certs.append(b)
        value = D * y
        for a in range(len(R)):
            for bb in range(len(R)):
                value = value - (xi[a] * S[a][bb] * zeta[bb]).shift(certs[a])
    else:
        raise ValueError("side must be 'right' or 'left'")
    return ClearedQuasidet(side, D_sym, value, tuple(certs))


def verify_boxed_identities(ctx: AlgebraContext, I: Sequence[int], i: Optional[int] = None,
                            j: Optional[int] = None, M: Sequence[int] = ()) -> bool:
    """The first-column quasideterminant of ``X[I, 1..d]`` equals ``[I] D^-1``, and the two-ratio identity.

    ``D`` is the minor on rows ``I[1:]`` (in that order) and columns
    ``2..d``.  The first identity is checked as ``|I|_{11} * D = [I]``.
    When ``i``, ``j`` are given, ``|i M| |j M|^-1 = [i M][j M]^-1`` is then
    checked by clearing, with both quasideterminants replaced by their
    (verified) minor ratios.
    """
    I = tuple(I)
    if not _boxed_first(ctx, I):
        return False
    if i is None:
        return True
    M = tuple(M)
    if not (_boxed_first(ctx, (i,) + M) and _boxed_first(ctx, (j,) + M)):
        return False
    if len(set((j,) + M)) != len(M) + 1:
        raise ValueError("the denominator |j M| vanishes")
    D = MinorSymbol(M, tuple(range(2, len(M) + 2)) if M else None)
    iM, jM = MinorSymbol((i,) + M), MinorSymbol((j,) + M)
    lhs = MinorRatioWord(LaurentPoly(1), ((iM, 1), (D, -1), (D, 1), (jM, -1))) if M else \
        MinorRatioWord(LaurentPoly(1), ((iM, 1), (jM, -1)))
    rhs = MinorRatioWord(LaurentPoly(1), ((iM, 1), (jM, -1)))
    return RatioEquation(ctx, [lhs], [rhs]).holds()


def _boxed_first(ctx: AlgebraContext, I: Tuple[int, ...]) -> bool:
    """``|I|_{11} * det_q X[I[1:], 2..d] == [I]`` with both minors in the given row order."""
    d = len(I)
    cleared = clear_quasidet(ctx, I, _full(d), 1, 1, "right")
    # clearing used the minor on sorted rows; reorder it to I[1:]
    return cleared.value.scale(minus_q(-tuple_length(I[1:]))) == qdet(ctx, I, _full(d))


def quasidet_ratio(ctx: AlgebraContext, rows: Sequence[int], cols: Sequence[int], i: int, j: int) -> MinorRatioWord:
    """``|Y|_{ij} = (-q)^(s-p) D^-1 det_q Y`` for ``Y = X[rows, cols]`` with sorted labels.

    ``p``, ``s`` are the positions of row ``i`` and column ``j`` in ``Y``.
    """
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    p, s = rows.index(i) + 1, cols.index(j) + 1
    R = tuple(x for x in rows if x != i)
    C = tuple(x for x in cols if x != j)
    factors = []
    if R:
        factors.append((MinorSymbol(R, C), -1))
    factors.append((MinorSymbol(rows, cols), 1))
    return MinorRatioWord(minus_q(s - p), tuple(factors))


def certify_quasidet_ratio(ctx: AlgebraContext, rows: Sequence[int], cols: Sequence[int], i: int, j: int) -> str:
    """Check :func:`quasidet_ratio` and return how it was certified.

    Tries clearing the definition on the right, then on the left.  Interior
    positions admit neither; there the ratio follows from the inverse
    formula ``Y^-1 = S(Y) det_q(Y)^-1``, which is checked here, together
    with ``|Y|_{ij} = ((Y^-1)_{ji})^-1``.  Raises ``AssertionError`` on a
    failed identity.
    """
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    p, s = rows.index(i) + 1, cols.index(j) + 1
    E = qdet(ctx, rows, cols)
    c = minus_q(s - p)
    for side in ("right", "left"):
        try:
            cleared = clear_quasidet(ctx, rows, cols, p, s, side)
        except NoCommutationCertificate:
            continue
        # right: c D^-1 E D = c E needs E and D to commute (nested minors)
        if side == "right" and cleared.D.size and q_commute_exponent(ctx, cleared.D, MinorSymbol(rows, cols)) != 0:
            raise AssertionError("nested minors fail to commute")
        if cleared.value != E.scale(c):
            raise AssertionError("cleared quasideterminant differs from the minor ratio")
        return side
    Y = _entries(ctx, rows, cols)
    S = antipode_of(ctx, rows, cols)
    if not (_is_scalar_matrix(matmul(S, Y), E) and _is_scalar_matrix(matmul(Y, S), E)):
        raise AssertionError("antipode fails to invert the submatrix")
    return "antipode"


def verify_quant_via_quasi(ctx: AlgebraContext, row_order: Sequence[int], col_order: Sequence[int]) -> bool:
    """``det_q X = (-q)^(l(rows)-l(cols)) |X|_{i1 j1} |X^{i1 j1}|_{i2 j2} ...`` by clearing."""
    n = ctx.n
    rows_o, cols_o = tuple(row_order), tuple(col_order)
    if sorted(rows_o) != list(_full(n)) or sorted(cols_o) != list(_full(n)) or ctx.m != n:
        raise ValueError("need orderings of 1..n in a square context")
    factors = []
    prefactor = minus_q(tuple_length(rows_o) - tuple_length(cols_o))
    stage_minors = []
    for k in range(n):
        R, C = tuple(sorted(rows_o[k:])), tuple(sorted(cols_o[k:]))
        try:
            certify_quasidet_ratio(ctx, R, C, rows_o[k], cols_o[k])
        except AssertionError:
            return False
        w = quasidet_ratio(ctx, R, C, rows_o[k], cols_o[k])
        prefactor = prefactor * w.prefactor
        factors.extend(w.factors)
        stage_minors.append(MinorSymbol(R, C))
    for A, B in itertools.combinations(stage_minors, 2):
        if q_commute_exponent(ctx, A, B) != 0:
            return False
    whole = MinorSymbol(_full(n), _full(n))
    eq = RatioEquation(ctx, [MinorRatioWord(LaurentPoly(1), ((whole, 1),))],
                       [MinorRatioWord(prefactor, tuple(factors))])
    return eq.holds()


# ---------------------------------------------------------------------------
# q = 1
# ---------------------------------------------------------------------------


def verify_classical_laplace(m: int, J: Sequence[int], p: int) -> bool:
    """Laplace expansion down ``J[:p]`` for the generic commutative ``m x m`` matrix.

    The determinant is taken from the ``q = 1`` image of the quantum
    determinant and also from cofactor expansion.
    """
    ctx = AlgebraContext(m)
    M = commutative_generic_matrix(ctx)
    zero = CommPoly()
    det = lambda S: cofactor_det(S, zero=zero)
    full = specialize_q1(det_q(ctx))
    return full == det(M) and laplace_expansion(M, p, tuple(J), det=det, zero=zero) == full
