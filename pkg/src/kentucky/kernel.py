"""Kentucky-2 sequence terms.

Indices are 1-based: ``a(1), a(2), a(3), a(4) = 1, 2, 3, 4`` and
``a(n) = a(n-2) + 2*a(n-4)`` for ``n >= 5``.  Terms are grouped in bins of
two, bin ``k`` holding ``a(2k-1)`` and ``a(2k)``.
"""

from __future__ import annotations

import threading
from bisect import bisect_right

CONSTRUCTIVE_MAX_TERMS = 40


class BudgetExceeded(ValueError):
    """Raised when an exhaustive search would exceed its configured size cap."""


class InvariantError(RuntimeError):
    """An internal cross-check failed."""


def bin_of(index: int, bin_size: int = 2) -> int:
    """Bin number (1-based) holding the term at ``index``."""
    return -(-index // bin_size)


class SequenceTable:
    """Append-only cache of Kentucky-2 terms.

    Storage is 0-based internally; ``table[n]`` and :meth:`term` take the
    1-based index and extend the cache on demand.  Once extended far enough,
    the table is only ever read, so it may be shared between threads.
    """

    skip = 1
    bin_size = 2

    def __init__(self, up_to: int = 16):
        self._terms = [1, 2, 3, 4]
        self._lock = threading.Lock()
        self.extend(up_to)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, n: int) -> int:
        return self.term(n)

    def __repr__(self):
        return f"SequenceTable(len={len(self._terms)})"

    @property
    def terms(self) -> list[int]:
        """The cached terms ``a(1), a(2), ...`` (a 0-based list; do not mutate)."""
        return self._terms

    def extend(self, up_to: int) -> SequenceTable:
        if up_to < 1:
            raise ValueError(f"up_to must be >= 1, got {up_to}")
        if up_to <= len(self._terms):
            return self
        with self._lock:
            t = self._terms
            while len(t) < up_to:
                # a(n) = a(n-2) + 2 a(n-4) with n = len(t) + 1
                t.append(t[-2] + 2 * t[-4])
        return self

    def term(self, n: int) -> int:
        if n < 1:
            raise IndexError(f"sequence indices start at 1, got {n}")
        self.extend(n)
        return self._terms[n - 1]

    def head(self, count: int) -> list[int]:
        self.extend(count)
        return self._terms[:count]

    def cover(self, m: int) -> int:
        """Extend until the largest cached term exceeds ``m``.

        Returns the index of the largest term ``<= m`` (0 when ``m < 1``).
        """
        while self._terms[-1] <= m:
            # each bin roughly doubles the terms, so grow by bit length
            self.extend(len(self._terms) + 2 * max(m.bit_length(), 8))
        return bisect_right(self._terms, m)

    def index_of(self, value: int) -> int | None:
        """1-based index of ``value`` if it is a term, else ``None``."""
        pos = self.cover(value)
        if pos and self._terms[pos - 1] == value:
            return pos
        return None


TABLE = SequenceTable(64)


def extend(table: SequenceTable, up_to: int) -> SequenceTable:
    return table.extend(up_to)


def terms(count: int) -> list[int]:
    """First ``count`` terms of the Kentucky-2 sequence."""
    return TABLE.head(count)


def term_closed_form(n: int) -> int:
    """``a(n)`` from ``a(2k) = 2**k`` and ``3 a(2k-1) = 2**(k+1) + (-1)**k``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2 == 0:
        return 1 << (n // 2)
    k = (n + 1) // 2
    q, r = divmod((1 << (k + 1)) + (-1) ** k, 3)
    if r:
        raise InvariantError(f"closed form not integral at n={n}")
    return q


def _reachable(bins: list[list[int]], k: int, skip: int, memo: dict[int, int]) -> int:
    # bitmask of every sum legally formed from bins[0..k]; bit 0 is the empty sum
    if k < 0:
        return 1
    if k not in memo:
        below = _reachable(bins, k - 1, skip, memo)
        clear = _reachable(bins, k - 1 - skip, skip, memo)
        mask = below
        for t in bins[k]:
            mask |= clear << t
        memo[k] = mask
    return memo[k]


def build_constructive(s: int, b: int, count: int,
                       max_terms: int = CONSTRUCTIVE_MAX_TERMS) -> list[int]:
    """First ``count`` terms of the (s, b)-Generacci sequence, built greedily.

    Each new term is the smallest positive integer that cannot be written as a
    sum of earlier terms using at most one term per bin and no two terms from
    bins within ``s`` of each other.  Representability is decided by
    exhaustively enumerating the sums of all legal subsets, so this never
    touches the recurrence or the greedy decomposer.
    """
    if s < 1 or b < 1:
        raise ValueError(f"need s >= 1 and b >= 1, got s={s}, b={b}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > max_terms:
        raise BudgetExceeded(f"count={count} exceeds exhaustive budget {max_terms}")

    out: list[int] = []
    bins: list[list[int]] = []
    memo: dict[int, int] = {}
    for _ in range(count):
        mask = _reachable(bins, len(bins) - 1, s, memo)
        # lowest clear bit = smallest non-representable integer
        nxt = (~mask & (mask + 1)).bit_length() - 1
        if not bins or len(bins[-1]) == b:
            bins.append([])
        bins[-1].append(nxt)
        memo.pop(len(bins) - 1, None)
        out.append(nxt)
    return out
