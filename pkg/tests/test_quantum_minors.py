import itertools

import pytest

from ncgrass.classical import cofactor_det, submatrix
from ncgrass.quantum.algebra import AlgebraContext, CommPoly, commutative_generic_matrix, specialize_q1
from ncgrass.quantum.identities import (
    antipode,
    certify_quasidet_ratio,
    clear_quasidet,
    det_q,
    q_generic_violations,
    verify_antipode,
    verify_centrality,
    verify_classical_laplace,
    verify_inverse_genericity,
    verify_last_minor_commutation,
    verify_multiplicativity,
    verify_q_alternating,
    verify_quant_via_quasi,
    verify_weak_qcommute,
)
from ncgrass.quantum.minors import (
    MinorRatioWord,
    MinorSymbol,
    RatioEquation,
    ShapeMismatch,
    minor,
    minus_q,
    q_commute_exponent,
    qdet,
)
from ncgrass.scalars import LaurentPoly

q = LaurentPoly.q()
CTX2, CTX3 = AlgebraContext(2), AlgebraContext(3)
C24 = AlgebraContext(4, 2)


def test_qdet_small():
    assert qdet(CTX2, (1,), (1,)) == CTX2.x(1, 1)
    x = CTX2.x
    assert det_q(CTX2) == x(1, 1) * x(2, 2) - (x(1, 2) * x(2, 1)).scale(q.inverse())
    d3 = det_q(CTX3)
    assert len(d3.words()) == 6
    assert sorted(d3.terms().values(), key=lambda c: min(c.coefficients())) == sorted(
        (minus_q(-l) for l in (0, 1, 1, 2, 2, 3)), key=lambda c: min(c.coefficients()))


def test_empty_minor_is_one():
    assert qdet(CTX2, (), ()) == CTX2.one()


def test_row_permutations():
    assert verify_q_alternating(CTX2, (1, 2))
    assert qdet(CTX2, (2, 1), (1, 2)) == det_q(CTX2).scale(minus_q(-1))
    assert qdet(CTX2, (1, 1), (1, 2)).is_zero()
    assert verify_q_alternating(CTX3, (3, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_centrality(n):
    assert verify_centrality(AlgebraContext(n))


def test_antipode_entries_for_two_by_two():
    x = CTX2.x
    S = antipode(CTX2)
    assert S == [[x(2, 2), x(1, 2).scale(-q)], [x(2, 1).scale(-q.inverse()), x(1, 1)]]
    assert verify_antipode(CTX2)


def test_antipode_one_and_three():
    ctx1 = AlgebraContext(1)
    assert antipode(ctx1) == [[ctx1.one()]]
    assert verify_antipode(CTX3)


def test_antipode_lives_at_inverse_q():
    S = antipode(CTX2)
    assert S[0][1] * S[0][0] == (S[0][0] * S[0][1]).scale(q.inverse())
    assert verify_inverse_genericity(AlgebraContext(1))
    assert verify_inverse_genericity(CTX2)
    # it is not q-generic for q itself
    assert q_generic_violations(S, power=1)


def test_multiplicativity():
    assert verify_multiplicativity(1)
    assert verify_multiplicativity(2)


def test_weak_q_commutation():
    assert verify_weak_qcommute(C24, 1, 2, (3,))
    assert verify_weak_qcommute(C24, 2, 3, (4,))


def test_commutation_exponents():
    assert q_commute_exponent(C24, minor(1, 2), minor(1, 2)) == 0
    nested = AlgebraContext(4, 3)
    assert q_commute_exponent(nested, minor(1, 2, 3), minor(2, 3, cols=(2, 3))) == 0
    assert isinstance(q_commute_exponent(C24, minor(1, 2), minor(3, 4)), int)


@pytest.mark.parametrize("I, exponent", [((3, 4), 0), ((1, 2), 2), ((1, 3), 1)])
def test_last_minor(I, exponent):
    assert verify_last_minor_commutation(C24, 2, 4, I)
    last, f = qdet(C24, (3, 4), (1, 2)), qdet(C24, I, (1, 2))
    assert last * f == (f * last).shift(exponent)


def test_minor_symbol_canonical_form():
    factor, sym = MinorSymbol((2, 1)).canonical()
    assert factor == minus_q(-1) and sym == MinorSymbol((1, 2))
    assert MinorSymbol((1, 1)).canonical() == (LaurentPoly(), None)
    assert str(MinorSymbol((1, 2))) == "[1 2]"
    assert str(MinorSymbol((1, 2), (2, 3))) == "[1 2|2 3]"
    with pytest.raises(ValueError):
        MinorSymbol((1, 2), (3, 2))


def test_ratio_equation_clears_denominators():
    a, b = minor(1, 2), minor(3, 4)
    lhs = [MinorRatioWord(LaurentPoly(1), ((a, 1), (b, -1), (b, 1)))]
    rhs = [MinorRatioWord(LaurentPoly(1), ((a, 1),))]
    assert RatioEquation(C24, lhs, rhs).holds()
    wrong = [MinorRatioWord(q, ((a, 1),))]
    assert not RatioEquation(C24, lhs, wrong).holds()


def test_first_column_clearing():
    cleared = clear_quasidet(CTX2, (1, 2), (1, 2), 1, 1, "right")
    assert cleared.value == det_q(CTX2)
    with pytest.raises(ShapeMismatch):
        clear_quasidet(AlgebraContext(4, 3), (1, 2, 2), (1, 2, 3), 1, 1)


def test_quasidet_ratio_certificates():
    assert certify_quasidet_ratio(CTX3, (1, 2, 3), (1, 2, 3), 1, 1) in ("right", "left")
    assert certify_quasidet_ratio(CTX3, (1, 2, 3), (1, 2, 3), 2, 2) == "antipode"


def test_determinant_through_quasidets():
    assert verify_quant_via_quasi(AlgebraContext(1), (1,), (1,))
    assert verify_quant_via_quasi(CTX2, (1, 2), (1, 2))
    assert verify_quant_via_quasi(CTX2, (2, 1), (1, 2))
    assert verify_quant_via_quasi(CTX3, (3, 1, 2), (2, 3, 1))


@pytest.mark.parametrize("m, J, p", [(2, (1, 2), 1), (4, (1, 2, 3, 4), 2), (3, (2, 3, 1), 1)])
def test_classical_laplace(m, J, p):
    assert verify_classical_laplace(m, J, p)


def test_minors_specialize_to_classical_determinants():
    ctx = AlgebraContext(4, 3)
    M = commutative_generic_matrix(ctx)
    for k in (1, 2, 3):
        for rows in itertools.combinations(range(1, 5), k):
            for cols in itertools.combinations(range(1, 4), k):
                expected = cofactor_det(submatrix(M, rows, cols), zero=CommPoly())
                assert specialize_q1(qdet(ctx, rows, cols)) == expected


@pytest.mark.parametrize("n, d", [(3, 2), (4, 2), (4, 3)])
def test_weak_q_commutation_exhaustive(n, d):
    ctx = AlgebraContext(n, d)
    rows = range(1, n + 1)
    for M in itertools.combinations(rows, d - 1):
        outside = [x for x in rows if x not in M]
        for i, j in itertools.combinations(outside, 2):
            assert verify_weak_qcommute(ctx, i, j, M)


def test_ratio_word_text():
    w = MinorRatioWord(minus_q(1), ((minor(1, 2), 1), (minor(3, 4), -1)))
    assert str(w) == "(-q)[1 2][3 4]^-1"
