"""Derive the size-one quantum symmetry relation from a quasi-Plücker relation.

The derivation starts from ``sum_{j in L} r_ij^{L-j} r_ji^J = 1`` with
``i`` chosen from ``I \\ J`` and ``L = I - i``, rewrites every coordinate
as a ratio of quantum minors, clears denominators, and canonicalizes the
minors.  :func:`verify_specialization` replays each line and checks it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..combinatorics import tuple_length
from ..quasi_plucker import verify_qp_relation
from ..quasidet import DivMatrix, Undefined
from ..scalars import LaurentPoly
from .algebra import AlgebraContext, NCPoly
from .identities import (
    canonical_minor_poly,
    verify_boxed_identities,
    verify_q_alternating,
    young_sum,
    young_terms,
)
from .minors import MinorRatioWord, MinorSymbol, RatioEquation, minus_q, q_commute_exponent, qdet


class DegenerateCase(Exception):
    """``I \\ J`` is empty, so no starting index exists."""


@dataclass
class SpecializationResult:
    lines: List[Tuple[str, bool]] = field(default_factory=list)
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.lines)

    def check(self, name: str, ok: bool) -> bool:
        self.lines.append((name, bool(ok)))
        return bool(ok)

    def failed(self) -> List[str]:
        return [name for name, ok in self.lines if not ok]


def _without(t: Sequence[int], x: int) -> Tuple[int, ...]:
    return tuple(y for y in t if y != x)


def _m(*rows: int) -> MinorSymbol:
    return MinorSymbol(tuple(rows))


def _word(prefactor, *factors) -> MinorRatioWord:
    return MinorRatioWord(prefactor if isinstance(prefactor, LaurentPoly) else LaurentPoly(prefactor), tuple(factors))


def _raw(ctx: AlgebraContext, rows: Sequence[int]) -> NCPoly:
    rows = tuple(rows)
    return qdet(ctx, rows, tuple(range(1, len(rows) + 1)))


def quasi_relation_over_quaternions(d: int, n: int, i: int, L: Sequence[int], M: Sequence[int],
                                    seed: str, attempts: int = 5) -> bool:
    """The starting relation evaluated on seeded random quaternion matrices."""
    rng = random.Random(seed)
    for _ in range(attempts):
        A = DivMatrix.random_quaternion(rng, n, d)
        try:
            return verify_qp_relation(A, i, L, M) == 1
        except Undefined:
            continue
    raise Undefined("every sampled matrix hit a vanishing quasideterminant")


def verify_specialization(ctx: AlgebraContext, d: int, n: int, I: Sequence[int], J: Sequence[int],
                          i_choice: Optional[int]) -> SpecializationResult:
    """Replay the derivation for one ``(I, J, i)`` and record every checked line.

    When ``I \\ J`` is empty the result is marked degenerate and the only
    check is that every term of the symmetry sum vanishes by q-alternation.
    """
    res = SpecializationResult()
    I, J = tuple(I), tuple(J)
    if len(I) != d + 1 or len(J) != d - 1:
        raise ValueError("need |I| = d+1 and |J| = d-1")
    if not set(I) - set(J):
        res.degenerate = True
        for c, A, B in young_terms(1, I, J):
            res.check("term %r %r vanishes" % (A, B), canonical_minor_poly(ctx, A).is_zero()
                      or canonical_minor_poly(ctx, B).is_zero())
        res.check("sum is zero", young_sum(ctx, 1, I, J).is_zero())
        return res
    I = tuple(sorted(I))
    J = tuple(sorted(J))
    i = i_choice
    if i not in I or i in J:
        raise ValueError("i must lie in I but not in J")
    L = _without(I, i)
    seed = repr((d, n, I, J, i))

    # the quasi-Plucker relation itself
    res.check("quasi-Plucker relation", quasi_relation_over_quaternions(d, n, i, L, J, seed))

    # each coordinate becomes a minor ratio
    for lam in L:
        rest = _without(L, lam)
        res.check("boxed ratio %d,%d over %r" % (i, lam, rest),
                  verify_boxed_identities(ctx, (i,) + rest, i, lam, rest))
        if lam not in J:
            res.check("boxed ratio %d,%d over %r" % (lam, i, J),
                      verify_boxed_identities(ctx, (lam,) + J, lam, i, J))
        else:  # numerator minor vanishes; its boxed identity still holds
            res.check("boxed vanishing %d over %r" % (lam, J), verify_boxed_identities(ctx, (lam,) + J))

    iJ = _m(i, *J)
    # 1 = sum [i L-l][l L-l]^-1 [l J][i J]^-1
    line4 = [_word(1, (_m(i, *_without(L, lam)), 1), (_m(lam, *_without(L, lam)), -1),
                   (_m(lam, *J), 1), (iJ, -1)) for lam in L]
    res.check("ratio form", RatioEquation(ctx, [_word(1)], line4).holds())

    # [i J] = sum q^b [l L-l]^-1 [i L-l][l J]
    line5, line6, line7 = [], [], ctx.zero()
    Lsym = _m(*L)
    expected = {}
    for lam in L:
        rest = _without(L, lam)
        X, Y = _m(i, *rest), _m(lam, *rest)
        b = q_commute_exponent(ctx, X, Y)
        res.check("exponent for %d,%d" % (i, lam), b == (1 if i < lam else -1))
        if b is None:
            return res
        line5.append(_word(LaurentPoly.monomial(b), (Y, -1), (X, 1), (_m(lam, *J), 1)))
        sign = minus_q(tuple_length((lam,) + rest))
        res.check("alternating %r" % ((lam,) + rest,), verify_q_alternating(ctx, (lam,) + rest))
        line6.append(_word(LaurentPoly.monomial(b) * sign, (Lsym, -1), (X, 1), (_m(lam, *J), 1)))
        line7 = line7 + (_raw(ctx, (i,) + rest) * _raw(ctx, (lam,) + J)).scale(LaurentPoly.monomial(b) * sign)
        # move i into place inside I - lam
        res.check("alternating %r" % ((i,) + rest,), verify_q_alternating(ctx, (i,) + rest))
        expected[lam] = LaurentPoly.monomial(b) * sign * minus_q(-tuple_length((i,) + rest))
    res.check("left-cleared form", RatioEquation(ctx, [_word(1, (iJ, 1))], line5).holds())
    res.check("common denominator", RatioEquation(ctx, [_word(1, (iJ, 1))], line6).holds())
    lead = _raw(ctx, L) * _raw(ctx, (i,) + J)
    res.check("polynomial form", lead == line7)

    # [L][i J] = -sum (-q)^(l(lam | I-lam) - l(i | I-i)) [I-lam][lam J]
    line8 = ctx.zero()
    for lam in L:
        coeff = -minus_q(tuple_length((lam,) + _without(I, lam)) - tuple_length((i,) + L))
        res.check("coefficient for %d" % lam, expected[lam] == coeff)
        line8 = line8 + (canonical_minor_poly(ctx, _without(I, lam)) * canonical_minor_poly(ctx, (lam,) + J)).scale(coeff)
    res.check("canonical minors", lead == line8)

    # move everything to one side after scaling by (-q)^(-l(L | i))
    scale = minus_q(-tuple_length(L + (i,)))
    total = (canonical_minor_poly(ctx, L) * canonical_minor_poly(ctx, (i,) + J)).scale(scale)
    for lam in L:
        final = minus_q(-tuple_length(_without(I, lam) + (lam,)))
        res.check("final coefficient for %d" % lam, -expected[lam] * scale == final)
        total = total + (canonical_minor_poly(ctx, _without(I, lam)) * canonical_minor_poly(ctx, (lam,) + J)).scale(final)
    res.check("terminal relation", total.is_zero())
    res.check("terminal relation is the symmetry sum", total == young_sum(ctx, 1, I, J))
    return res
