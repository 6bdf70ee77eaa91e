"""Gap lengths between consecutive summands.

Over all ``m`` in ``[0, a(2n+1))``, count how often a gap of length ``g``
appears, either by decomposing every ``m`` or by summing, over the starting
index ``i``, (ways to fill below ``i``) x (ways to fill above ``i+g``).
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import pnk_row
from .decomp import decompose
from .kernel import TABLE, BudgetExceeded, bin_of

BRUTEFORCE_MAX_N = 22


@dataclass
class GapHistogram:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total_gaps(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, g: int) -> int:
        return self.counts.get(g, 0)

    def probability(self, g: int) -> Fraction:
        total = self.total_gaps
        if not total:
            raise ZeroDivisionError(f"no gaps at n={self.n}")
        return Fraction(self[g], total)


def gap_histogram_bruteforce(n: int, include_wait: bool = False,
                             max_n: int = BRUTEFORCE_MAX_N) -> GapHistogram:
    """Decompose every ``m < a(2n+1)`` and tally its gaps.

    With ``include_wait`` the index of the first summand is tallied too, as a
    gap measured from index 0.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds brute-force budget {max_n}")
    tally: Counter = Counter()
    for m in range(TABLE[2 * n + 1]):
        idx = decompose(m).indices
        if include_wait and idx:
            tally[idx[0]] += 1
        for lo, hi in zip(idx, idx[1:]):
            tally[hi - lo] += 1
    return GapHistogram(n, dict(sorted(tally.items())))


def _below_count(i: int) -> int:
    # legal decompositions using only indices that may precede a summand at i
    if i % 2 == 0:
        q, r = divmod((1 << (i // 2)) + (-1) ** ((i - 2) // 2), 3)
    else:
        h = (i - 1) // 2
        q, r = divmod((1 << (h + 1)) + (-1) ** h, 3)
    assert r == 0
    return q


def _above_count(n: int, top: int) -> int:
    # legal decompositions using only indices in (top, 2n] that may follow top
    if top % 2 == 0:
        h = (2 * n - top) // 2
    else:
        h = (2 * n - (top + 1)) // 2
    q, r = divmod((1 << (h + 1)) + (-1) ** h, 3)
    assert r == 0
    return q


def gap_count_formula(n: int, g: int) -> int:
    """Number of gaps of length ``g`` over all decompositions in ``[0, a(2n+1))``.

    Gap ``(i, i+g)`` is only possible when the two bins are at least two
    apart; that rules out ``g = 3`` from an odd ``i``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if g < 3:
        return 0
    total = 0
    for i in range(1, 2 * n - g + 1):
        if bin_of(i + g) - bin_of(i) < 2:
            continue
        total += _below_count(i) * _above_count(n, i + g)
    return total


def gap_histogram_formula(n: int) -> GapHistogram:
    counts = {}
    for g in range(3, 2 * n):
        c = gap_count_formula(n, g)
        if c:
            counts[g] = c
    return GapHistogram(n, counts)


def total_gaps(n: int) -> int:
    """``sum over m of max(k(m) - 1, 0)``, from the summand-count row."""
    return sum((k - 1) * p for k, p in enumerate(pnk_row(n)) if k >= 1)


def off_by_one_normalizer(n: int) -> Fraction:
    """``1 / ((mu_n - 1) a(2n+1))``, which treats ``m = 0`` as contributing -1 gaps.

    Exactly ``1 / (total_gaps(n) - 1)``; kept for comparison only.
    """
    from .stats import exact_mean
    return 1 / ((exact_mean(n) - 1) * TABLE[2 * n + 1])


def pn_of_g(n: int, g: int) -> Fraction:
    """Fraction of all gaps in ``[0, a(2n+1))`` that have length ``g``."""
    total = total_gaps(n)
    if total == 0:
        raise ZeroDivisionError(f"no gaps occur for n={n}")
    return Fraction(gap_count_formula(n, g) if g >= 3 else 0, total)


def limit_p(g: int) -> Fraction:
    """Limiting gap probability: 0 below 3, 1/8 at 3, then 2^-j or (3/4) 2^-j."""
    if g < 0:
        raise ValueError(f"g must be >= 0, got {g}")
    if g < 3:
        return Fraction(0)
    if g == 3:
        return Fraction(1, 8)
    j, odd = divmod(g, 2)
    p = Fraction(1, 1 << j)
    return p * Fraction(3, 4) if odd else p


GAP_CSV_FIELDS = ("g", "count", "p_n_float", "p_limit_float")


def gap_rows(hist: GapHistogram, g_max: int | None = None):
    total = hist.total_gaps
    top = g_max if g_max is not None else max(hist.counts, default=2)
    for g in range(3, top + 1):
        c = hist[g]
        yield {"g": g, "count": c,
               "p_n_float": c / total if total else 0.0,
               "p_limit_float": float(limit_p(g))}


def write_gap_csv(hist: GapHistogram, fh, g_max: int | None = None) -> None:
    writer = csv.DictWriter(fh, fieldnames=GAP_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(gap_rows(hist, g_max))
