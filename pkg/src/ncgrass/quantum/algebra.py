"""Quantum matrix algebra as a rewriting system with PBW normal forms.

Generators ``x[i,j]`` (and ``y[i,j]`` for a second, commuting block) are
encoded as ints ordered block-major, then row-major.  A word is normal when
its generators are non-decreasing.  Out-of-order adjacent pairs ``a b``
(``a > b``) are rewritten with the q-generic relations::

    x[k,j] x[k,i] -> q x[k,i] x[k,j]                          (i < j)
    x[j,k] x[i,k] -> q x[i,k] x[j,k]                          (i < j)
    x[j,k] x[i,l] -> x[i,l] x[j,k]                            (i < j, k < l)
    x[j,l] x[i,k] -> x[i,k] x[j,l] + (q - q^-1) x[i,l] x[j,k] (i < j, k < l)

and generators of different blocks commute.

Text dump grammar (used by golden files)::

    poly  := "0" | term (" + " term)*
    term  := "(" laurent ")" ("*" gen)*      -- no gens means the empty word
    gen   := ("x" | "y") "[" row "," col "]"

where ``laurent`` is :func:`ncgrass.scalars.format_laurent` output and
terms are sorted by word.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..scalars import LaurentPoly, RationalLike, format_laurent

Word = Tuple[int, ...]
# flattened term key: (normal word, exponent of q)
Key = Tuple[Word, int]
Terms = Dict[Key, RationalLike]


class ContextMismatch(ValueError):
    pass


def _add_into(out: Terms, key: Key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class AlgebraContext:
    """Generators of an ``n x m`` q-generic matrix, optionally two commuting blocks."""

    BLOCK_NAMES = "xy"

    def __init__(self, n: int, m: Optional[int] = None, blocks: int = 1,
                 commuting_blocks: bool = True):
        m = n if m is None else m
        if n < 1 or m < 1:
            raise ValueError("context needs positive dimensions")
        if blocks not in (1, 2):
            raise ValueError("only one or two blocks are supported")
        if blocks == 2 and not commuting_blocks:
            raise ValueError("two blocks need the cross-commutation rules")
        self.n, self.m, self.blocks = n, m, blocks
        self.commuting_blocks = commuting_blocks
        self._size = n * m
        self._append_memo: Dict[Tuple[Word, int], Terms] = {}
        self._wordmul_memo: Dict[Tuple[Word, Word], Terms] = {}
        self._cache: Dict = {}  # scratch space for higher layers (minors, certificates)

    # -- generators -------------------------------------------------------
    def gen_index(self, row: int, col: int, block: int = 0) -> int:
        if not (1 <= row <= self.n and 1 <= col <= self.m and 0 <= block < self.blocks):
            raise ContextMismatch("generator (%d, %d, block %d) not in a %dx%d context with %d block(s)"
                                  % (row, col, block, self.n, self.m, self.blocks))
        return block * self._size + (row - 1) * self.m + (col - 1)

    def decode(self, g: int) -> Tuple[int, int, int]:
        block, rest = divmod(g, self._size)
        row, col = divmod(rest, self.m)
        return block, row + 1, col + 1

    def gen_name(self, g: int) -> str:
        block, row, col = self.decode(g)
        return "%s[%d,%d]" % (self.BLOCK_NAMES[block], row, col)

    def generators(self, block: Optional[int] = None) -> List[int]:
        blocks = range(self.blocks) if block is None else [block]
        return [b * self._size + k for b in blocks for k in range(self._size)]

    def x(self, row: int, col: int, block: int = 0) -> "NCPoly":
        return NCPoly(self, {((self.gen_index(row, col, block),), 0): 1})

    def one(self) -> "NCPoly":
        return NCPoly(self, {((), 0): 1})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def scalar(self, c: Union[LaurentPoly, RationalLike]) -> "NCPoly":
        return self.one().scale(c)

    def signature(self) -> tuple:
        return (self.n, self.m, self.blocks, self.commuting_blocks)

    # -- rewriting --------------------------------------------------------
    def swap_rule(self, a: int, b: int) -> List[Tuple[RationalLike, int, Word]]:
        """Rewrite of the out-of-order pair ``a b`` (``a > b``) as ``[(coeff, q-exponent, word)]``."""
        ba, ra, ca = self.decode(a)
        bb, rb, cb = self.decode(b)
        if ba != bb:
            return [(1, 0, (b, a))]
        if ra == rb:  # same row, ca > cb
            return [(1, 1, (b, a))]
        if ca == cb:  # same column, ra > rb
            return [(1, 1, (b, a))]
        if ca < cb:  # a = x[j,k], b = x[i,l]
            return [(1, 0, (b, a))]
        # a = x[j,l], b = x[i,k] with i < j, k < l
        il = self.gen_index(rb, ca, bb)
        jk = self.gen_index(ra, cb, bb)
        return [(1, 0, (b, a)), (1, 1, (il, jk)), (-1, -1, (il, jk))]

    def append(self, w: Word, g: int) -> Terms:
        """Normal form of ``w * g`` for a normal word ``w``."""
        if not w or w[-1] <= g:
            return {(w + (g,), 0): 1}
        key = (w, g)
        hit = self._append_memo.get(key)
        if hit is not None:
            return hit
        head = w[:-1]
        out: Terms = {}
        for c, e, pair in self.swap_rule(w[-1], g):
            partial: Terms = {(head, e): c}
            for h in pair:
                nxt: Terms = {}
                for (w1, e1), c1 in partial.items():
                    for (w2, e2), c2 in self.append(w1, h).items():
                        _add_into(nxt, (w2, e1 + e2), c1 * c2)
                partial = nxt
            for k, v in partial.items():
                _add_into(out, k, v)
        self._append_memo[key] = out
        return out

    def multiply_words(self, u: Word, v: Word) -> Terms:
        """Normal form of ``u * v`` for normal words ``u``, ``v``."""
        if not v:
            return {(u, 0): 1}
        if not u or u[-1] <= v[0]:
            return {(u + v, 0): 1}
        key = (u, v)
        hit = self._wordmul_memo.get(key)
        if hit is not None:
            return hit
        partial: Terms = {(u, 0): 1}
        for g in v:
            nxt: Terms = {}
            for (w1, e1), c1 in partial.items():
                for (w2, e2), c2 in self.append(w1, g).items():
                    _add_into(nxt, (w2, e1 + e2), c1 * c2)
            partial = nxt
        self._wordmul_memo[key] = partial
        return partial

    def normal_form_word(self, word: Sequence[int]) -> Terms:
        return self.multiply_words((), tuple(word)) if _is_normal(word) else self._fold(word)

    def _fold(self, word: Sequence[int]) -> Terms:
        partial: Terms = {((), 0): 1}
        for g in word:
            nxt: Terms = {}
            for (w1, e1), c1 in partial.items():
                for (w2, e2), c2 in self.append(w1, g).items():
                    _add_into(nxt, (w2, e1 + e2), c1 * c2)
            partial = nxt
        return partial

    def reduce_by_strategy(self, word: Sequence[int], strategy: str = "leftmost") -> Terms:
        """Plain one-step rewriting until every word is normal.

        Independent of :meth:`append`; ``strategy`` picks the leftmost or
        rightmost out-of-order pair at each step.
        """
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError("strategy must be 'leftmost' or 'rightmost'")
        done: Terms = {}
        pending: Terms = {(tuple(word), 0): 1}
        while pending:
            (w, e), c = pending.popitem()
            positions = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
            if not positions:
                _add_into(done, (w, e), c)
                continue
            k = positions[0] if strategy == "leftmost" else positions[-1]
            for c2, e2, pair in self.swap_rule(w[k], w[k + 1]):
                _add_into(pending, (w[:k] + pair + w[k + 2:], e + e2), c * c2)
        return done

    def normal_form(self, raw: Union[Mapping[Sequence[int], Union[LaurentPoly, RationalLike]], "NCPoly"]) -> "NCPoly":
        """Normal form of a raw ``{word: coefficient}`` expression."""
        if isinstance(raw, NCPoly):
            self._check(raw)
            return raw
        out: Terms = {}
        for word, coeff in raw.items():
            for g in word:
                if not 0 <= g < self.blocks * self._size:
                    raise ContextMismatch("generator %r outside the context" % (g,))
            lp = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly(coeff)
            nf = self._fold(tuple(word))
            for e0, c0 in lp.coefficients().items():
                for (w, e), c in nf.items():
                    _add_into(out, (w, e + e0), c * c0)
        return NCPoly(self, out)

    def _check(self, p: "NCPoly") -> None:
        if p.ctx is not self and p.ctx.signature() != self.signature():
            raise ContextMismatch("polynomial belongs to a different context")

    def random_word(self, rng: random.Random, length: int) -> Word:
        gens = self.generators()
        return tuple(rng.choice(gens) for _ in range(length))

    def __repr__(self) -> str:
        return "AlgebraContext(n=%d, m=%d, blocks=%d)" % (self.n, self.m, self.blocks)


def _is_normal(word: Sequence[int]) -> bool:
    return all(word[k] <= word[k + 1] for k in range(len(word) - 1))


class NCPoly:
    """Element of the quantum matrix algebra, stored in normal form.

    Internally a map ``(normal word, q-exponent) -> rational``; equality is
    structural.  Coefficients are exposed as :class:`LaurentPoly` through
    :meth:`terms`.
    """

    __slots__ = ("ctx", "_t", "_hash")

    def __init__(self, ctx: AlgebraContext, terms: Terms):
        self.ctx = ctx
        self._t = terms
        self._hash = None

    def _same(self, other: "NCPoly") -> None:
        if other.ctx is not self.ctx and other.ctx.signature() != self.ctx.signature():
            raise ContextMismatch("polynomials from different contexts")

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.ctx.scalar(other)
        return NotImplemented

    def terms(self) -> Dict[Word, LaurentPoly]:
        grouped: Dict[Word, Dict[int, RationalLike]] = {}
        for (w, e), c in self._t.items():
            grouped.setdefault(w, {})[e] = c
        return {w: LaurentPoly(cs) for w, cs in grouped.items()}

    def coefficient(self, word: Sequence[int]) -> LaurentPoly:
        return self.terms().get(tuple(word), LaurentPoly())

    def is_zero(self) -> bool:
        return not self._t

    def words(self) -> List[Word]:
        return sorted({w for w, _ in self._t})

    def degree_set(self) -> set:
        return {len(w) for w, _ in self._t}

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self._t)
        for k, c in o._t.items():
            _add_into(out, k, c)
        return NCPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.ctx, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, c: Union[LaurentPoly, RationalLike]) -> "NCPoly":
        lp = c if isinstance(c, LaurentPoly) else LaurentPoly(c)
        out: Terms = {}
        for e0, c0 in lp.coefficients().items():
            for (w, e), cc in self._t.items():
                _add_into(out, (w, e + e0), cc * c0)
        return NCPoly(self.ctx, out)

    def shift(self, b: int) -> "NCPoly":
        """Multiply by ``q**b``."""
        return NCPoly(self.ctx, {(w, e + b): c for (w, e), c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._same(other)
        ctx = self.ctx
        out: Terms = {}
        for (u, e1), c1 in self._t.items():
            for (v, e2), c2 in other._t.items():
                c12 = c1 * c2
                for (w, e3), c3 in ctx.multiply_words(u, v).items():
                    _add_into(out, (w, e1 + e2 + e3), c12 * c3)
        return NCPoly(ctx, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "NCPoly":
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self.ctx.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def dump(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for w, lp in sorted(self.terms().items()):
            gens = "".join("*" + self.ctx.gen_name(g) for g in w)
            parts.append("(%s)%s" % (format_laurent(lp.coefficients()), gens))
        return " + ".join(parts)

    __str__ = dump

    def __repr__(self) -> str:
        return "NCPoly<%s>" % self.dump()


def nc_eq(p: NCPoly, r: NCPoly) -> bool:
    p._same(r)
    return p == r


def nc_mul(p: NCPoly, r: NCPoly) -> NCPoly:
    return p * r


def nc_add(p: NCPoly, r: NCPoly) -> NCPoly:
    return p + r


def nc_sub(p: NCPoly, r: NCPoly) -> NCPoly:
    return p - r


# ---------------------------------------------------------------------------
# q = 1 specialization
# ---------------------------------------------------------------------------


class CommPoly:
    """Commutative polynomial: sorted generator tuple -> rational coefficient."""

    __slots__ = ("_t",)

    def __init__(self, terms: Optional[Mapping[Word, RationalLike]] = None):
        self._t: Dict[Word, RationalLike] = {}
        for w, c in (terms or {}).items():
            if c:
                self._t[tuple(sorted(w))] = self._t.get(tuple(sorted(w)), 0) + c
        self._t = {w: c for w, c in self._t.items() if c}

    @classmethod
    def gen(cls, g: int) -> "CommPoly":
        return cls({(g,): 1})

    @classmethod
    def const(cls, c: RationalLike) -> "CommPoly":
        return cls({(): c})

    def _lift(self, other):
        if isinstance(other, CommPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return CommPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self._t)
        for w, c in o._t.items():
            out[w] = out.get(w, 0) + c
        return CommPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly({w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out: Dict[Word, RationalLike] = {}
        for w1, c1 in self._t.items():
            for w2, c2 in o._t.items():
                w = tuple(sorted(w1 + w2))
                out[w] = out.get(w, 0) + c1 * c2
        return CommPoly(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> Dict[Word, RationalLike]:
        return dict(self._t)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __repr__(self) -> str:
        return "CommPoly(%r)" % (self._t,)


def specialize_q1(p: NCPoly) -> CommPoly:
    """Set ``q = 1`` and forget the order of generators."""
    out: Dict[Word, RationalLike] = {}
    for (w, _e), c in p._t.items():
        out[w] = out.get(w, 0) + c
    return CommPoly(out)


def commutative_generic_matrix(ctx: AlgebraContext, block: int = 0) -> List[List[CommPoly]]:
    return [[CommPoly.gen(ctx.gen_index(i, j, block)) for j in range(1, ctx.m + 1)]
            for i in range(1, ctx.n + 1)]


# ---------------------------------------------------------------------------
# infrastructure checks
# ---------------------------------------------------------------------------


def confluence_smoke(ctx: AlgebraContext, seed: int, trials: int, max_length: int = 6) -> List[Word]:
    """Random words reduced leftmost-first, rightmost-first and by insertion.

    Also checks associativity of :func:`nc_mul` on random triples.  Returns
    the counterexample words (empty when everything agrees).
    """
    rng = random.Random(seed)
    bad: List[Word] = []
    for _ in range(trials):
        w = ctx.random_word(rng, rng.randint(1, max_length))
        left = ctx.reduce_by_strategy(w, "leftmost")
        right = ctx.reduce_by_strategy(w, "rightmost")
        fast = ctx._fold(w)
        if not (left == right == fast):
            bad.append(w)
        a, b, c = (NCPoly(ctx, ctx._fold(ctx.random_word(rng, rng.randint(1, 3)))) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append(("assoc",) + w)
    return bad


def pbw_normal_word_count(ctx: AlgebraContext, degree: int) -> int:
    """Distinct normal words reached by reducing every word of the given degree."""
    seen = set()
    for w in itertools.product(ctx.generators(), repeat=degree):
        for (nw, _e) in ctx.reduce_by_strategy(w, "leftmost"):
            seen.add(nw)
    return len(seen)


def embed(p: NCPoly, rows: Sequence[int], cols: Sequence[int], target: AlgebraContext) -> NCPoly:
    """Send ``x[i,j]`` of ``p``'s context to ``x[rows[i-1], cols[j-1]]`` of ``target``.

    ``rows`` and ``cols`` must be increasing so the image of a normal word
    is a word; its normal form is recomputed in ``target``.
    """
    src = p.ctx
    raw: Dict[Word, LaurentPoly] = {}
    for w, lp in p.terms().items():
        img = []
        for g in w:
            block, r, c = src.decode(g)
            img.append(target.gen_index(rows[r - 1], cols[c - 1], block))
        raw[tuple(img)] = raw.get(tuple(img), LaurentPoly()) + lp
    return target.normal_form(raw)
