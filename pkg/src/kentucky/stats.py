"""Distribution of the summand count ``Y_n``.

``Y_n`` is the number of summands of an integer drawn uniformly from
``[0, a(2n+1))``.  Moments stay exact (``Fraction``) until they are displayed;
only the normal-approximation diagnostics use floats.
"""

from __future__ import annotations

import csv
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import ndtr

from .counting import pnk_row
from .kernel import TABLE, InvariantError

DEFAULT_T_GRID = (-2.0, -1.0, 0.0, 1.0, 2.0)


def pmf(n: int) -> list[Fraction]:
    """``P(Y_n = k) = p(n, k) / a(2n+1)`` for ``k = 0..floor((n+1)/2)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    row = pnk_row(n)
    total = TABLE[2 * n + 1]
    if sum(row) != total:
        raise InvariantError(f"row {n} sums to {sum(row)}, expected a(2n+1)={total}")
    return [Fraction(p, total) for p in row]


@lru_cache(maxsize=256)
def _raw_moments(n: int) -> tuple[int, int, int]:
    row = pnk_row(n)
    return (sum(row),
            sum(k * p for k, p in enumerate(row)),
            sum(k * k * p for k, p in enumerate(row)))


def exact_mean(n: int) -> Fraction:
    s0, s1, _ = _raw_moments(n)
    return Fraction(s1, s0)


def exact_variance(n: int) -> Fraction:
    s0, s1, s2 = _raw_moments(n)
    mu = Fraction(s1, s0)
    return Fraction(s2, s0) - mu * mu


def gn_at_one_closed_form(n: int) -> int:
    """``g_n(1) = ((-1)^(n+1) + 2^(n+2)) / 3``."""
    q, r = divmod((-1) ** (n + 1) + (1 << (n + 2)), 3)
    assert r == 0
    return q


def variance_closed_form(n: int) -> Fraction:
    """Exact variance as a single rational expression in ``n`` and ``2^n``."""
    sign = (-1) ** n
    num = ((1 << (2 * n + 5)) * (4 + 3 * n) - 2 * (8 + 3 * n)
           - (1 << (n + 2)) * sign * (28 + 36 * n + 9 * n * n))
    den = 81 * ((1 << (n + 2)) - sign) ** 2
    return Fraction(num, den)


def asymptotic_moments(n: int) -> tuple[float, float]:
    """Leading-order ``(mean, variance) = (n/3 + 2/9, 2n/27 + 8/81)``."""
    return n / 3 + 2 / 9, 2 * n / 27 + 8 / 81


def asymptotic_moments_exact(n: int) -> tuple[Fraction, Fraction]:
    return Fraction(n, 3) + Fraction(2, 9), Fraction(2 * n, 27) + Fraction(8, 81)


# -- uniform on an arbitrary interval [0, bound) -----------------------------


_factorial_moments: list[tuple[int, int, int]] = [(1, 0, 0), (3, 2, 0)]


def factorial_moments(n: int) -> tuple[int, int, int]:
    """``(g_n(1), g_n'(1), g_n''(1))`` by differentiating ``g_n = g_{n-1} + 2y g_{n-2}``."""
    fm = _factorial_moments
    while len(fm) <= n:
        (a0, a1, a2), (b0, b1, b2) = fm[-2], fm[-1]
        fm.append((b0 + 2 * a0, b1 + 2 * a0 + 2 * a1, b2 + 4 * a1 + 2 * a2))
    return fm[n]


def _power_sums_below_term(index: int) -> tuple[int, int, int]:
    # (count, sum k, sum k^2) over [0, a(index)); index >= 1
    if index % 2 == 1:
        g0, g1, g2 = factorial_moments((index - 1) // 2)
        return g0, g1, g2 + g1
    # [0, a(2j)) = [0, a(2j-1)) + (a(2j-1) + [0, a(2j-3)))
    lo = _power_sums_below_term(index - 1)
    hi = _power_sums_below_term(index - 3) if index > 3 else (1, 0, 0)
    return _shift_add(lo, hi)


def _shift_add(lo, hi):
    # lo plus hi with one extra summand on every member of hi
    c, s1, s2 = hi
    return lo[0] + c, lo[1] + s1 + c, lo[2] + s2 + 2 * s1 + c


def power_sums_below(bound: int) -> tuple[int, int, int]:
    """``(count, sum k, sum k^2)`` of summand counts ``k`` over ``[0, bound)``.

    Splits ``[0, bound)`` at the largest term ``a(l) < bound``: everything in
    ``[a(l), bound)`` is ``a(l)`` plus the decomposition of the remainder.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    acc = (0, 0, 0)
    extra = 0      # summands already fixed above the current remainder
    TABLE.cover(bound)
    terms = TABLE.terms
    while bound:
        ell = bisect_right(terms, bound - 1)
        if ell == 0:   # bound == 1 -> just m = 0
            part = (1, 0, 0)
        else:
            part = _power_sums_below_term(ell)
        c, s1, s2 = part
        acc = (acc[0] + c,
               acc[1] + s1 + extra * c,
               acc[2] + s2 + 2 * extra * s1 + extra * extra * c)
        if ell == 0:
            break
        bound -= terms[ell - 1]
        extra += 1
    return acc


def moments_below(bound: int) -> tuple[Fraction, Fraction]:
    """Exact mean and variance of the summand count of a uniform draw from ``[0, bound)``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    c, s1, s2 = power_sums_below(bound)
    mu = Fraction(s1, c)
    return mu, Fraction(s2, c) - mu * mu


# -- normal approximation ----------------------------------------------------


@dataclass
class DistributionSummary:
    n: int
    mean: Fraction
    variance: Fraction
    pmf: list[Fraction]
    ks_to_normal: float
    mgf_log_residual: float
    mgf_residuals: dict[float, float] = field(default_factory=dict)

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def normalized(self) -> np.ndarray:
        k = np.arange(len(self.pmf), dtype=float)
        return (k - float(self.mean)) / self.std


def ks_distance(weights: np.ndarray, z: np.ndarray) -> float:
    """Two-sided KS distance between a lattice distribution and N(0, 1).

    ``weights`` are the probabilities at the sorted support points ``z``.  The
    step CDF is compared at each point and at its left limit.
    """
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    left = np.concatenate(([0.0], cdf[:-1]))
    phi = ndtr(z)
    return float(max(np.max(np.abs(cdf - phi)), np.max(np.abs(left - phi))))


def log_mgf_residuals(weights: np.ndarray, z: np.ndarray, t_grid) -> dict[float, float]:
    """``|log E[exp(t Z)] - t^2/2|`` for each ``t``.

    Dividing by the float sum of the weights keeps ``t = 0`` exactly at zero.
    """
    w = [float(v) for v in weights]
    total = math.fsum(w)
    out = {}
    for t in t_grid:
        t = float(t)
        m = math.fsum(wi * math.exp(t * zi) for wi, zi in zip(w, z.tolist())) / total
        out[t] = abs(math.log(m) - t * t / 2)
    return out


def gaussian_diagnostics(n: int, t_grid=DEFAULT_T_GRID) -> DistributionSummary:
    if n < 2:
        raise ValueError(f"diagnostics need n >= 2, got {n}")
    for t in t_grid:
        if not -2 <= t <= 2:
            raise ValueError(f"t values must lie in [-2, 2], got {t}")
    probs = pmf(n)
    if sum(probs) != 1:
        raise InvariantError(f"pmf for n={n} does not sum to 1")
    mu, var = exact_mean(n), exact_variance(n)
    sigma = math.sqrt(var)
    k = np.arange(len(probs), dtype=float)
    z = (k - float(mu)) / sigma
    w = np.array([float(p) for p in probs])
    residuals = log_mgf_residuals(w, z, t_grid)
    return DistributionSummary(
        n=n, mean=mu, variance=var, pmf=probs,
        ks_to_normal=ks_distance(w, z),
        mgf_log_residual=max(residuals.values()) if residuals else 0.0,
        mgf_residuals=residuals,
    )


PMF_CSV_FIELDS = ("k", "p_exact_num", "p_exact_den", "p_float", "normalized_k")


def pmf_rows(n: int):
    """Rows of the pmf table, one per ``k``; big integers stay exact."""
    probs = pmf(n)
    mu, var = exact_mean(n), exact_variance(n)
    sigma = math.sqrt(var) if var else 0.0
    for k, p in enumerate(probs):
        zk = (k - float(mu)) / sigma if sigma else 0.0
        yield {"k": k, "p_exact_num": p.numerator, "p_exact_den": p.denominator,
               "p_float": float(p), "normalized_k": zk}


def write_pmf_csv(n: int, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=PMF_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(pmf_rows(n))
