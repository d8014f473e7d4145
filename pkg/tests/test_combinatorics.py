import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from ncgrass.combinatorics import (
    BadSize,
    NotASubset,
    bubble_sort_swaps,
    permutations,
    split_tuple,
    subsets,
    tuple_length,
)
from ncgrass.quantum.minors import minus_q
from ncgrass.scalars import LaurentPoly


@pytest.mark.parametrize("t, length", [((1, 2, 3), 0), ((2, 1), 1), ((3, 1, 2), 2), ((), 0)])
def test_tuple_length(t, length):
    assert tuple_length(t) == length


def test_repeated_entries_do_not_count():
    assert tuple_length((2, 2, 1)) == 2


@pytest.mark.parametrize("lam, expected", [((3,), ((1, 2, 3), 0)), ((2,), ((1, 3, 2), 1)), ((1,), ((2, 3, 1), 2))])
def test_split_tuple(lam, expected):
    assert split_tuple((1, 2, 3), lam) == expected


def test_split_tuple_rejects_foreign_indices():
    with pytest.raises(NotASubset):
        split_tuple((1, 2), (3,))


def test_subsets():
    assert subsets((1, 2, 3), 2) == [(1, 2), (1, 3), (2, 3)]
    assert subsets((1, 2, 3, 4), 0) == [()]
    six = subsets((1, 2, 3, 4), 2)
    assert len(six) == 6 and six[0] == (1, 2) and six[-1] == (3, 4)
    with pytest.raises(BadSize):
        subsets((1, 2), 3)


def test_permutations():
    assert permutations(1) == [((1,), 0)]
    assert permutations(2) == [((1, 2), 0), ((2, 1), 1)]
    total = sum((minus_q(-length) for _, length in permutations(3)), LaurentPoly())
    assert sorted(total.coefficients()) == [-3, -2, -1, 0]
    assert sorted(length for _, length in permutations(3)) == [0, 1, 1, 2, 2, 3]


@given(st.lists(st.integers(0, 50), unique=True, max_size=9))
def test_length_matches_bubble_sort(t):
    assert tuple_length(t) == bubble_sort_swaps(t)


@given(st.sets(st.integers(1, 12), max_size=7), st.integers(0, 7))
def test_subset_counts(S, r):
    if r > len(S):
        return
    out = subsets(S, r)
    assert len(out) == comb(len(S), r) == len(set(out))


def test_length_splitting_rule_exhaustive():
    # l(I-Lam | Lam) = l(I-Lam | Lam_(s)) + l(I_(s) | i_s) - l(Lam_(s) | i_s)
    for size in range(1, 7):
        I = tuple(range(1, size + 1))
        for r in range(1, size + 1):
            for lam in itertools.combinations(I, r):
                rest = tuple(x for x in I if x not in lam)
                for s, i_s in enumerate(lam):
                    lam_s = lam[:s] + lam[s + 1:]
                    I_s = tuple(x for x in I if x != i_s)
                    assert tuple_length(rest + lam) == (tuple_length(rest + lam_s)
                                                        + tuple_length(I_s + (i_s,))
                                                        - tuple_length(lam_s + (i_s,)))
