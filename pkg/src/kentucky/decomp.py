"""Legal Kentucky-2 decompositions.

A decomposition is a strictly increasing list of indices whose bins are pairwise
at least two apart (no two summands from one bin or from adjacent bins).  Zero
is the empty decomposition.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass

from .kernel import TABLE, BudgetExceeded, InvariantError, SequenceTable, bin_of

ENUMERATE_MAX_INDEX = 50


@dataclass(frozen=True)
class Decomposition:
    indices: tuple[int, ...]
    value: int

    def __len__(self):
        return len(self.indices)

    def terms(self, table: SequenceTable = TABLE) -> list[int]:
        return [table[i] for i in self.indices]

    @property
    def bins(self) -> list[int]:
        return [bin_of(i) for i in self.indices]

    @property
    def gaps(self) -> list[int]:
        """Consecutive index differences, in order."""
        idx = self.indices
        return [b - a for a, b in zip(idx, idx[1:])]


def _check_indices(indices) -> None:
    prev = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"indices start at 1, got {i}")
        if i <= prev:
            raise ValueError(f"indices must be strictly increasing: {list(indices)}")
        prev = i


def is_legal(indices) -> bool:
    _check_indices(indices)
    bins = [bin_of(i) for i in indices]
    return all(hi - lo >= 2 for lo, hi in zip(bins, bins[1:]))


def decompose(m: int, table: SequenceTable = TABLE) -> Decomposition:
    """Greedy decomposition of ``m``.

    Takes the largest term not exceeding the remainder, then restricts later
    picks to indices ``<= l-4`` (``l`` even) or ``<= l-3`` (``l`` odd).
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    hi = table.cover(m)
    terms = table.terms
    rem = m
    picked = []
    while rem:
        ell = bisect_right(terms, rem, 0, hi)
        if ell == 0:
            raise InvariantError(f"greedy stalled on m={m} with remainder {rem}")
        picked.append(ell)
        rem -= terms[ell - 1]
        hi = max(ell - (4 if ell % 2 == 0 else 3), 0)
    picked.reverse()
    return Decomposition(tuple(picked), m)


def summand_count(m: int, table: SequenceTable = TABLE) -> int:
    """Number of summands in the decomposition of ``m``.

    Same greedy as :func:`decompose` without building the index list.  For a
    remainder with bit length ``L`` the largest term below it is ``a(2L-1)`` or
    ``a(2L-2) = 2**(L-1)``, so no search is needed.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    table.extend(2 * m.bit_length() + 2)
    a = table.terms
    k = 0
    while m:
        L = m.bit_length()
        t = a[2 * L - 2]  # a(2L-1)
        m -= t if m >= t else a[2 * L - 3]
        k += 1
    return k


def enumerate_all(m: int, max_index: int, table: SequenceTable = TABLE,
                  budget: int = ENUMERATE_MAX_INDEX) -> list[Decomposition]:
    """Every legal index set over ``a(1)..a(max_index)`` summing to ``m``.

    Depth-first over bins from the top: each bin contributes nothing, its
    first element or its second element, and a choice skips the bin below.
    """
    if max_index > budget:
        raise BudgetExceeded(f"max_index={max_index} exceeds budget {budget}")
    if m < 0 or max_index < 0:
        raise ValueError("m and max_index must be non-negative")
    a = table.head(max(max_index, 1))
    # partial[k]: sum of every term in bins 1..k, a crude pruning bound
    nbins = bin_of(max_index)
    partial = [0] * (nbins + 1)
    for k in range(1, nbins + 1):
        members = [i for i in (2 * k - 1, 2 * k) if i <= max_index]
        partial[k] = partial[k - 1] + sum(a[i - 1] for i in members)

    found: list[Decomposition] = []
    chosen: list[int] = []

    def dfs(k: int, rem: int) -> None:
        if rem == 0:
            found.append(Decomposition(tuple(reversed(chosen)), m))
            return
        if k < 1 or rem > partial[k]:
            return
        dfs(k - 1, rem)
        for i in (2 * k, 2 * k - 1):
            if i <= max_index and a[i - 1] <= rem:
                chosen.append(i)
                dfs(k - 2, rem - a[i - 1])
                chosen.pop()

    dfs(nbins, m)
    found.sort(key=lambda d: d.indices)
    return found


def gaps_of(d: Decomposition) -> Counter:
    """Gap multiset ``{l2-l1, l3-l2, ...}``; the wait before ``l1`` is not a gap."""
    return Counter(d.gaps)
