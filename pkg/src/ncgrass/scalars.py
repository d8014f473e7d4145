"""Exact scalar towers: rationals, rational quaternions, Laurent polynomials in q.

Rationals are plain :class:`fractions.Fraction` values (ints are accepted
wherever a rational is expected).  The helpers :func:`invert`,
:func:`is_zero`, :func:`one_like` and :func:`zero_like` work uniformly over
all three scalar types so matrix code can stay generic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_gcd = math.gcd
_new = object.__new__


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting zero."""


class NonUnit(ArithmeticError):
    """Raised when inverting a Laurent polynomial that is not a monomial."""


class ZeroSubstitution(ValueError):
    """Raised when evaluating a Laurent polynomial at q = 0."""


def _rat(x: RationalLike) -> RationalLike:
    # keep integers as ints: Fraction arithmetic is much slower
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# ---------------------------------------------------------------------------
# Quaternions
# ---------------------------------------------------------------------------


class Quaternion:
    """Rational quaternion ``a + b i + c j + d k``.

    Stored as four integer numerators over one positive common denominator,
    reduced so the five integers share no common factor.  This keeps the
    multiplication to integer work plus a single gcd.
    """

    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0,
                 c: RationalLike = 0, d: RationalLike = 0):
        fa, fb, fc, fd = (Fraction(x) for x in (a, b, c, d))
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        self._set(fa.numerator * (den // fa.denominator),
                  fb.numerator * (den // fb.denominator),
                  fc.numerator * (den // fc.denominator),
                  fd.numerator * (den // fd.denominator),
                  den)

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        g = math.gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        self._a, self._b, self._c, self._d, self._den = a, b, c, d, den
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "Quaternion":
        q = _new(cls)
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        g = _gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        q._a, q._b, q._c, q._d, q._den = a, b, c, d, den
        q._hash = None
        return q

    @classmethod
    def random(cls, rng: random.Random, lo: int = -9, hi: int = 9) -> "Quaternion":
        return cls._raw(rng.randint(lo, hi), rng.randint(lo, hi),
                        rng.randint(lo, hi), rng.randint(lo, hi), 1)

    @property
    def components(self) -> tuple:
        den = self._den
        return tuple(Fraction(x, den) for x in (self._a, self._b, self._c, self._d))

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._d, self._den)

    def norm(self) -> Fraction:
        """Reduced norm ``a^2 + b^2 + c^2 + d^2``."""
        return Fraction(self._a ** 2 + self._b ** 2 + self._c ** 2 + self._d ** 2,
                        self._den ** 2)

    def conjugate(self) -> "Quaternion":
        return Quaternion._raw(self._a, -self._b, -self._c, -self._d, self._den)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    @staticmethod
    def _coerce(other) -> "Quaternion":
        if type(other) is Quaternion:
            return other
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return Quaternion(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._den, o._den
        return Quaternion._raw(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1,
                               self._c * d2 + o._c * d1, self._d * d2 + o._d * d1,
                               d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._den, o._den
        return Quaternion._raw(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1,
                               self._c * d2 - o._c * d1, self._d * d2 - o._d * d1,
                               d1 * d2)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = o._a, o._b, o._c, o._d
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            self._den * o._den,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self

    def inverse(self) -> "Quaternion":
        if self.is_zero():
            raise ZeroInverse("quaternion 0 has no inverse")
        a, b, c, d, den = self._a, self._b, self._c, self._d, self._den
        n = a * a + b * b + c * c + d * d
        # (x/den)^-1 = den * conj(x) / |x|^2
        return Quaternion._raw(a * den, -b * den, -c * den, -d * den, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, Quaternion):
            return (self._den == other._den and self._a == other._a and self._b == other._b
                    and self._c == other._c and self._d == other._d)
        if isinstance(other, (int, Fraction)):
            return self == Quaternion(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._b, self._c, self._d, self._den))
        return self._hash

    def __repr__(self) -> str:
        return "Quaternion(%s, %s, %s, %s)" % tuple(str(x) for x in self.components)

    def __str__(self) -> str:
        parts = []
        for coef, unit in zip(self.components, ("", "i", "j", "k")):
            if coef:
                parts.append("%s%s" % (coef, unit))
        return " + ".join(parts) if parts else "0"


QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


# ---------------------------------------------------------------------------
# Laurent polynomials in q
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finitely supported map ``exponent of q -> rational coefficient``.

    Zero coefficients are never stored, so ``==`` is structural.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, RationalLike], RationalLike, None] = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = {0: coeffs}
        self._c: Dict[int, RationalLike] = {int(e): _rat(c) for e, c in coeffs.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: RationalLike = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def minus_q_power(cls, m: int) -> "LaurentPoly":
        """``(-q)**m`` for any integer ``m``."""
        return cls({m: -1 if m % 2 else 1})

    def coefficients(self) -> Dict[int, RationalLike]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def degree_range(self) -> tuple:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c), max(self._c)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self._c)
        for e, c in o._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: Dict[int, RationalLike] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in o._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "LaurentPoly":
        if not self._c:
            raise ZeroInverse("Laurent polynomial 0 has no inverse")
        if len(self._c) != 1:
            raise NonUnit("only monomials c*q^m are invertible, got %s" % self)
        (e, c), = self._c.items()
        return LaurentPoly({-e: Fraction(1) / c})

    def substitute_inverse_q(self) -> "LaurentPoly":
        """The image under ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def eval(self, value: RationalLike) -> RationalLike:
        """Substitute ``q := value`` exactly."""
        if value == 0:
            raise ZeroSubstitution("cannot substitute q = 0 into a Laurent polynomial")
        v = Fraction(value)
        total = Fraction(0)
        for e, c in self._c.items():
            total += c * v ** e
        return _rat(total)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % (dict(sorted(self._c.items())),)

    def __str__(self) -> str:
        return format_laurent(self._c)


def format_laurent(coeffs: Mapping[int, RationalLike]) -> str:
    """ASCII form such as ``q^-1 - 2*q + 1/2*q^3``; zero prints as ``0``."""
    if not coeffs:
        return "0"
    out = []
    for e in sorted(coeffs):
        c = coeffs[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qpart = "q" if e == 1 else "q^%d" % e
            body = qpart if mag == 1 else "%s*%s" % (mag, qpart)
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += " %s %s" % (sign, body)
    return text


def eval_q(p: LaurentPoly, value: RationalLike) -> RationalLike:
    return p.eval(value)


# ---------------------------------------------------------------------------
# uniform helpers
# ---------------------------------------------------------------------------


def invert(x):
    """Two-sided inverse of a nonzero scalar of any supported type."""
    if isinstance(x, (Quaternion, LaurentPoly)):
        return x.inverse()
    if isinstance(x, _RationalABC):
        if x == 0:
            raise ZeroInverse("rational 0 has no inverse")
        return _rat(Fraction(1) / x)
    raise TypeError("unsupported scalar type %s" % type(x).__name__)


def is_zero(x) -> bool:
    if isinstance(x, (Quaternion, LaurentPoly)):
        return x.is_zero()
    return x == 0


def one_like(x):
    if isinstance(x, Quaternion):
        return Quaternion(1)
    if isinstance(x, LaurentPoly):
        return LaurentPoly(1)
    return 1


def zero_like(x):
    if isinstance(x, Quaternion):
        return Quaternion(0)
    if isinstance(x, LaurentPoly):
        return LaurentPoly()
    return 0


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9) -> int:
    return rng.randint(lo, hi)


def scalar_sum(values: Iterable, start):
    total = start
    for v in values:
        total = total + v
    return total
