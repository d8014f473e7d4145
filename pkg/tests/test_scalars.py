from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ncgrass.scalars import LaurentPoly, Quaternion, ZeroInverse, eval_q, invert

small = st.integers(-9, 9)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quaternions = st.builds(Quaternion, fractions, fractions, fractions, fractions)
laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)

q = LaurentPoly.q()


def test_rational_sum():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_quaternion_units():
    i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    assert i * j == k
    assert j * i == -k
    assert i * i == j * j == k * k == -1


def test_quaternion_inverse_of_one_plus_i():
    x = Quaternion(1, 1)
    assert invert(x) == Quaternion(Fraction(1, 2), Fraction(-1, 2))
    assert x * invert(x) == 1 == invert(x) * x


def test_rational_and_monomial_inverses():
    assert invert(Fraction(-3, 4)) == Fraction(-4, 3)
    assert invert(-q) == LaurentPoly.monomial(-1, -1)
    assert q * invert(q) == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        invert(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        invert(Quaternion(0))


def test_non_monomial_laurent_is_not_a_unit():
    with pytest.raises(ArithmeticError):
        invert(1 + q)


def test_substitution_examples():
    assert eval_q(q - q.inverse(), 1) == 0
    assert eval_q(LaurentPoly.minus_q_power(-2), 1) == 1
    assert eval_q(1 - q ** 2, 2) == -3


def test_laurent_drops_zero_coefficients():
    assert LaurentPoly({3: 0, 1: 2}) == LaurentPoly.monomial(1, 2)
    assert (q - q).is_zero()


@given(quaternions, quaternions, quaternions)
def test_quaternion_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(quaternions)
def test_quaternion_double_inverse(x):
    assume(not x.is_zero())
    assert invert(invert(x)) == x
    assert x * invert(x) == Quaternion(1)


@given(quaternions, quaternions)
def test_quaternion_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.norm() == sum(c * c for c in x.components)


@given(fractions.filter(bool))
def test_rational_double_inverse(x):
    assert invert(invert(x)) == x


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(laurents, laurents, st.sampled_from([Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(5, 2)]))
def test_substitution_is_a_ring_homomorphism(a, b, v):
    assert eval_q(a + b, v) == eval_q(a, v) + eval_q(b, v)
    assert eval_q(a * b, v) == eval_q(a, v) * eval_q(b, v)
