"""Quantum minors, q-commutation certificates and denominator clearing.

A :class:`RatioEquation` is a formal identity between sums of
:class:`MinorRatioWord` terms.  It is never evaluated by division.  Instead
inverse factors are eliminated by multiplying both sides by a minor, and
factors are reordered only when a certificate ``[B][A] = q^b [A][B]`` has
been found by :func:`find_q_exponent`.  Once no inverse is left both sides
are ordinary :class:`NCPoly` values and are compared exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..combinatorics import permutations, tuple_length
from ..scalars import LaurentPoly
from .algebra import AlgebraContext, NCPoly


class ShapeMismatch(ValueError):
    pass


class NoCommutationCertificate(ArithmeticError):
    """A reordering step needed a q-commutation exponent that was not found."""


class ZeroMinorInverse(ZeroDivisionError):
    pass


def minus_q(m: int) -> LaurentPoly:
    return LaurentPoly.minus_q_power(m)


def qdet(ctx: AlgebraContext, I: Sequence[int], J: Sequence[int], block: int = 0) -> NCPoly:
    """``sum_sigma (-q)^(-l(sigma)) x[I1, J_sigma1] ... x[Ik, J_sigmak]``.

    Rows are taken in the order given (repeats allowed); the empty minor is 1.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ShapeMismatch("row tuple %r and column tuple %r differ in length" % (I, J))
    if not I:
        return ctx.one()
    key = ("qdet", I, J, block)
    hit = ctx._cache.get(key)
    if hit is not None:
        return hit
    raw: Dict[tuple, LaurentPoly] = {}
    for perm, length in permutations(len(I)):
        word = tuple(ctx.gen_index(I[k], J[perm[k] - 1], block) for k in range(len(I)))
        raw[word] = raw.get(word, LaurentPoly()) + minus_q(-length)
    out = ctx.normal_form(raw)
    ctx._cache[key] = out
    return out


def qdet_of_matrix(entries: Sequence[Sequence[NCPoly]]) -> NCPoly:
    """Quantum determinant of a square matrix whose entries are algebra elements."""
    n = len(entries)
    if n == 0:
        raise ShapeMismatch("empty matrix has no context")
    total = entries[0][0].ctx.zero()
    for perm, length in permutations(n):
        term = entries[0][perm[0] - 1]
        for k in range(1, n):
            term = term * entries[k][perm[k] - 1]
        total = total + term.scale(minus_q(-length))
    return total


@dataclass(frozen=True)
class MinorSymbol:
    """The quantum minor ``[I]`` on rows ``I`` (in order) and columns ``1..|I|``.

    ``cols`` may name another increasing column tuple; it defaults to the
    first ``|I|`` columns.
    """

    rows: Tuple[int, ...]
    cols: Optional[Tuple[int, ...]] = None
    block: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.cols is not None:
            cols = tuple(self.cols)
            if list(cols) != sorted(set(cols)) or len(cols) != len(self.rows):
                raise ShapeMismatch("columns must be increasing and match the rows in length")
            if cols == tuple(range(1, len(cols) + 1)):
                cols = None
            object.__setattr__(self, "cols", cols)

    @property
    def columns(self) -> Tuple[int, ...]:
        return self.cols if self.cols is not None else tuple(range(1, len(self.rows) + 1))

    @property
    def size(self) -> int:
        return len(self.rows)

    def canonical(self) -> Tuple[LaurentPoly, Optional["MinorSymbol"]]:
        """``(factor, sorted symbol)`` with ``self = factor * sorted``; repeated rows give ``(0, None)``."""
        if len(set(self.rows)) != len(self.rows):
            return LaurentPoly(), None
        return minus_q(-tuple_length(self.rows)), MinorSymbol(tuple(sorted(self.rows)), self.cols, self.block)

    def is_canonical(self) -> bool:
        return list(self.rows) == sorted(set(self.rows))

    def expand(self, ctx: AlgebraContext) -> NCPoly:
        return qdet(ctx, self.rows, self.columns, self.block)

    def __str__(self) -> str:
        rows = " ".join(map(str, self.rows))
        if self.cols is None:
            return "[%s]" % rows
        return "[%s|%s]" % (rows, " ".join(map(str, self.cols)))


def minor(*rows: int, cols: Optional[Sequence[int]] = None) -> MinorSymbol:
    return MinorSymbol(tuple(rows), tuple(cols) if cols is not None else None)


def canonical_minor_poly(ctx: AlgebraContext, rows: Sequence[int]) -> NCPoly:
    """``f_rows`` expanded through the q-alternating canonicalization."""
    factor, sym = MinorSymbol(tuple(rows)).canonical()
    if sym is None:
        return ctx.zero()
    return sym.expand(ctx).scale(factor)


# ---------------------------------------------------------------------------
# q-commutation certificates
# ---------------------------------------------------------------------------


def find_q_exponent(P: NCPoly, Q: NCPoly, window: int) -> Optional[int]:
    """Integer ``b`` in ``[-window, window]`` with ``Q P = q^b P Q``, else ``None``."""
    QP, PQ = Q * P, P * Q
    for b in sorted(range(-window, window + 1), key=lambda b: (abs(b), b)):
        if QP == PQ.shift(b):
            return b
    return None


def exponent_window(ctx: AlgebraContext, *symbols: MinorSymbol) -> int:
    d = max([s.size for s in symbols] + [1])
    return 2 * d * ctx.n


def q_commute_exponent(ctx: AlgebraContext, I, J) -> Optional[int]:
    """``b`` with ``[J][I] = q^b [I][J]`` searched in ``[-2dn, 2dn]``; ``None`` when absent.

    ``I`` and ``J`` are row tuples or :class:`MinorSymbol` values.
    """
    A = I if isinstance(I, MinorSymbol) else MinorSymbol(tuple(I))
    B = J if isinstance(J, MinorSymbol) else MinorSymbol(tuple(J))
    key = ("qexp", A, B)
    if key in ctx._cache:
        return ctx._cache[key]
    b = find_q_exponent(A.expand(ctx), B.expand(ctx), exponent_window(ctx, A, B))
    ctx._cache[key] = b
    return b


# ---------------------------------------------------------------------------
# formal ratio words
# ---------------------------------------------------------------------------

Factor = Tuple[MinorSymbol, int]


@dataclass(frozen=True)
class MinorRatioWord:
    """``prefactor * M1^e1 * M2^e2 * ...`` with each ``e = +-1``."""

    prefactor: LaurentPoly
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        pf = self.prefactor if isinstance(self.prefactor, LaurentPoly) else LaurentPoly(self.prefactor)
        object.__setattr__(self, "prefactor", pf)
        object.__setattr__(self, "factors", tuple((m, e) for m, e in self.factors))
        for _, e in self.factors:
            if e not in (1, -1):
                raise ValueError("factor exponents must be +1 or -1")

    def canonical(self) -> "MinorRatioWord":
        """Sort every minor's rows; a vanishing numerator makes the whole word zero."""
        pf = self.prefactor
        out: List[Factor] = []
        for m, e in self.factors:
            c, sym = m.canonical()
            if sym is None:
                if e < 0:
                    raise ZeroMinorInverse("inverse of the vanishing minor %s" % m)
                return MinorRatioWord(LaurentPoly(), ())
            pf = pf * (c if e > 0 else c.inverse())
            out.append((sym, e))
        if pf.is_zero():
            return MinorRatioWord(LaurentPoly(), ())
        return MinorRatioWord(pf, tuple(out))

    def is_zero(self) -> bool:
        return self.prefactor.is_zero()

    def has_inverse(self) -> bool:
        return any(e < 0 for _, e in self.factors)

    def evaluate(self, ctx: AlgebraContext) -> NCPoly:
        if self.has_inverse():
            raise ValueError("cannot evaluate a word that still contains inverses")
        out = ctx.one()
        for m, _ in self.factors:
            out = out * m.expand(ctx)
        return out.scale(self.prefactor)

    def __str__(self) -> str:
        body = "".join(str(m) + ("^-1" if e < 0 else "") for m, e in self.factors)
        return "(%s)%s" % (self.prefactor, body or "1")


def ratio_word(prefactor, *factors: Factor) -> MinorRatioWord:
    return MinorRatioWord(prefactor if isinstance(prefactor, LaurentPoly) else LaurentPoly(prefactor),
                          tuple(factors))


@dataclass
class RatioEquation:
    """``sum(lhs) = sum(rhs)`` over formal minor ratios, checked by clearing denominators."""

    ctx: AlgebraContext
    lhs: List[MinorRatioWord]
    rhs: List[MinorRatioWord]
    log: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.lhs = [w.canonical() for w in self.lhs]
        self.rhs = [w.canonical() for w in self.rhs]
        self._prune()

    def _prune(self) -> None:
        self.lhs = [_cancel(w) for w in self.lhs if not w.is_zero()]
        self.rhs = [_cancel(w) for w in self.rhs if not w.is_zero()]

    def terms(self) -> List[MinorRatioWord]:
        return self.lhs + self.rhs

    # -- elementary steps -------------------------------------------------
    def mul_left(self, m: MinorSymbol) -> None:
        self.log.append("multiply on the left by %s" % m)
        self.lhs = [_cancel(MinorRatioWord(w.prefactor, ((m, 1),) + w.factors)) for w in self.lhs]
        self.rhs = [_cancel(MinorRatioWord(w.prefactor, ((m, 1),) + w.factors)) for w in self.rhs]

    def mul_right(self, m: MinorSymbol) -> None:
        self.log.append("multiply on the right by %s" % m)
        self.lhs = [_cancel(MinorRatioWord(w.prefactor, w.factors + ((m, 1),))) for w in self.lhs]
        self.rhs = [_cancel(MinorRatioWord(w.prefactor, w.factors + ((m, 1),))) for w in self.rhs]

    def swap_factors(self, side: str, term: int, pos: int) -> None:
        """Exchange factors ``pos`` and ``pos+1`` of one term using a certificate."""
        words = self.lhs if side == "lhs" else self.rhs
        w = words[term]
        (A, a), (B, b) = w.factors[pos], w.factors[pos + 1]
        exp = q_commute_exponent(self.ctx, A, B)  # [B][A] = q^exp [A][B]
        if exp is None:
            raise NoCommutationCertificate("no exponent b with %s%s = q^b %s%s" % (B, A, A, B))
        # A^a B^b = q^(-exp*a*b) B^b A^a
        factors = w.factors[:pos] + ((B, b), (A, a)) + w.factors[pos + 2:]
        words[term] = _cancel(MinorRatioWord(w.prefactor * LaurentPoly.monomial(-exp * a * b), factors))
        self.log.append("reorder %s^%d %s^%d with b=%d" % (A, a, B, b, exp))

    # -- driver -----------------------------------------------------------
    def clear(self, max_steps: int = 200) -> Tuple[NCPoly, NCPoly]:
        """Eliminate every inverse factor and return both sides as polynomials."""
        for _ in range(max_steps):
            self._prune()
            pending = [(side, k, w) for side, ws in (("lhs", self.lhs), ("rhs", self.rhs))
                       for k, w in enumerate(ws) if w.has_inverse()]
            if not pending:
                return (_sum(self.ctx, self.lhs), _sum(self.ctx, self.rhs))
            side, k, w = pending[0]
            if w.factors[-1][1] < 0:
                self.mul_right(w.factors[-1][0])
                continue
            if w.factors[0][1] < 0:
                self.mul_left(w.factors[0][0])
                continue
            pos = next(p for p, (_, e) in enumerate(w.factors) if e < 0)
            self.swap_factors(side, k, pos - 1)
        raise NoCommutationCertificate("clearing did not finish within %d steps" % max_steps)

    def holds(self, max_steps: int = 200) -> bool:
        left, right = self.clear(max_steps)
        return left == right

    def __str__(self) -> str:
        show = lambda ws: " + ".join(map(str, ws)) or "0"
        return "%s = %s" % (show(self.lhs), show(self.rhs))


def _cancel(w: MinorRatioWord) -> MinorRatioWord:
    out: List[Factor] = []
    for f in w.factors:
        if out and out[-1][0] == f[0] and out[-1][1] == -f[1]:
            out.pop()
        else:
            out.append(f)
    return MinorRatioWord(w.prefactor, tuple(out))


def _sum(ctx: AlgebraContext, words: Sequence[MinorRatioWord]) -> NCPoly:
    total = ctx.zero()
    for w in words:
        total = total + w.evaluate(ctx)
    return total


def nested_pairs(rows: Sequence[int], max_size: int):
    """All pairs ``(I, J)`` of increasing row tuples with ``J`` inside ``I``."""
    rows = tuple(rows)
    for k in range(1, max_size + 1):
        for I in itertools.combinations(rows, k):
            for k2 in range(1, k + 1):
                for J in itertools.combinations(I, k2):
                    yield I, J
