"""Tuple lengths, split tuples and subset/permutation enumeration.

Index tuples are plain Python tuples of positive ints.  Repeated entries are
allowed; pairs of equal entries never count as inversions.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, List, Sequence, Tuple

IndexTuple = Tuple[int, ...]


class NotASubset(ValueError):
    pass


class BadSize(ValueError):
    pass


def tuple_length(t: Sequence[int]) -> int:
    """Number of pairs ``a < b`` with ``t[a] > t[b]``."""
    n = len(t)
    return sum(1 for a in range(n) for b in range(a + 1, n) if t[a] > t[b])


def concat(*parts: Iterable[int]) -> IndexTuple:
    """The tuple ``I | J | ...``."""
    out: List[int] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def split_tuple(I: Iterable[int], lam: Iterable[int]) -> Tuple[IndexTuple, int]:
    """Return ``(I minus lam | lam, its length)``, both parts ascending."""
    I = tuple(sorted(I))
    lam = tuple(sorted(lam))
    if not set(lam) <= set(I):
        raise NotASubset("%r is not a subset of %r" % (lam, I))
    rest = tuple(i for i in I if i not in lam)
    t = rest + lam
    return t, tuple_length(t)


def subsets(S: Iterable[int], r: int) -> List[IndexTuple]:
    """All size-``r`` subsets of ``S`` as ascending tuples, in lex order."""
    S = tuple(sorted(S))
    if r < 0 or r > len(S):
        raise BadSize("subset size %d out of range for a set of size %d" % (r, len(S)))
    return list(itertools.combinations(S, r))


def permutations(m: int) -> List[Tuple[IndexTuple, int]]:
    """All permutations of ``1..m`` paired with their lengths."""
    if m < 1:
        raise BadSize("m must be >= 1")
    return [(p, tuple_length(p)) for p in itertools.permutations(range(1, m + 1))]


def bubble_sort_swaps(t: Sequence[int]) -> int:
    """Adjacent swaps bubble sort performs; an independent check on ``tuple_length``."""
    t = list(t)
    swaps = 0
    for end in range(len(t) - 1, 0, -1):
        for k in range(end):
            if t[k] > t[k + 1]:
                t[k], t[k + 1] = t[k + 1], t[k]
                swaps += 1
    return swaps


def sort_with_length(t: Sequence[int]) -> Tuple[IndexTuple, int, bool]:
    """Sorted copy of ``t``, its length, and whether ``t`` had a repeat."""
    return tuple(sorted(t)), tuple_length(t), len(set(t)) != len(t)


def remove_at(L: Sequence[int], k: int) -> IndexTuple:
    """``L`` with its element at 0-based position ``k`` removed."""
    return tuple(L[:k]) + tuple(L[k + 1:])


def derangements_of(m: int) -> Iterator[IndexTuple]:
    """Every ordering of ``1..m`` (the classical Laplace expansion allows any)."""
    return itertools.permutations(range(1, m + 1))
