import pytest

from ncgrass.quantum.algebra import AlgebraContext
from ncgrass.quantum.identities import (
    reduction_scalar_identity,
    verify_boxed_identities,
    verify_reduction,
    verify_young_symmetry,
    young_relation_at_q1,
    young_sum,
    young_terms,
)
from ncgrass.quantum.minors import canonical_minor_poly, minus_q
from ncgrass.quantum.specialization import verify_specialization
from ncgrass.scalars import LaurentPoly

q = LaurentPoly.q()
C12, C24 = AlgebraContext(2, 1), AlgebraContext(4, 2)


def test_young_size_one_column():
    x = C12.x
    assert (x(1, 1) * x(2, 1) - (x(2, 1) * x(1, 1)).scale(q.inverse())).is_zero()
    assert verify_young_symmetry(C12, 1, 1, (1, 2), ())


def test_young_three_term_relation():
    assert verify_young_symmetry(C24, 2, 1, (1, 2, 3), (4,))
    assert young_relation_at_q1(1, (1, 2, 3), (4,)) == "p12p34 - p13p24 + p23p14"


def test_young_size_two():
    assert verify_young_symmetry(C24, 2, 2, (1, 2, 3, 4), ())


def test_young_terms_cancel_only_in_sum():
    products = [canonical_minor_poly(C24, A) * canonical_minor_poly(C24, B)
                for _, A, B in young_terms(1, (1, 2, 3), (4,))]
    assert len(products) == 3 and not any(p.is_zero() for p in products)


def test_reduction_scalar_identity():
    assert reduction_scalar_identity((1, 2, 3), (2,))
    assert reduction_scalar_identity((1, 2, 3, 4), (2, 4))
    total = minus_q(2 - 2 * 0) + minus_q(2 - 2 * 1)
    assert total == 1 + q ** 2


def test_reduction_identity():
    assert verify_reduction(C24, 2, 2, (1, 2, 3, 4), ())


def test_boxed_identities():
    c41 = AlgebraContext(4, 1)
    assert verify_boxed_identities(c41, (3,))
    assert verify_boxed_identities(C24, (1, 2))
    assert verify_boxed_identities(C24, (3, 1))
    assert verify_boxed_identities(C24, (1, 3), 1, 2, (3,))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_specialization_three_term(i):
    res = verify_specialization(C24, 2, 4, (1, 2, 3), (4,), i)
    assert res.ok and not res.degenerate
    assert res.lines[-1] == ("terminal relation is the symmetry sum", True)


def test_specialization_degenerate_branch():
    res = verify_specialization(C24, 2, 4, (3, 3, 3), (3,), None)
    assert res.degenerate and res.ok


def test_specialization_rejects_bad_start():
    with pytest.raises(ValueError):
        verify_specialization(C24, 2, 4, (1, 2, 3), (3,), 3)
