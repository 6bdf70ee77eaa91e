"""Monte Carlo summand counts for uniformly random integers.

Random streams: the experiment seed feeds ``numpy.random.SeedSequence``, which
is spawned into one child per worker (child ``w`` has spawn key ``(w,)``).
Each child drives a PCG64 ``Generator``.  Worker ``w`` draws the ``w``-th
contiguous share of the samples, so a report depends only on
``(seed, workers, count, bound)``.
"""

from __future__ import annotations

import csv
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .decomp import summand_count
from .kernel import TABLE
from .stats import asymptotic_moments, moments_below

MAX_REJECTIONS = 10 ** 6
# bounds up to 2**62 take the vectorised int64 path
SMALL_BOUND = 1 << 62
BATCH = 1 << 16


@dataclass(frozen=True)
class SampleConfig:
    count: int
    bound: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass
class SampleReport:
    count: int
    bound: int
    empirical_mean: float
    empirical_std: float
    predicted_mean: float
    predicted_std: float
    n_eff: int
    exact_mean: float
    exact_std: float
    histogram: dict[int, int]

    def frequencies(self) -> dict[int, float]:
        return {k: c / self.count for k, c in self.histogram.items()}


def worker_rngs(seed: int, workers: int) -> list[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(ss))
            for ss in np.random.SeedSequence(seed).spawn(workers)]


def uniform_below(bound: int, rng: np.random.Generator) -> int:
    """Uniform integer in ``[0, bound)`` by rejection on ``bit_length(bound-1)``-bit blocks."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    bits = (bound - 1).bit_length()
    if bits == 0:
        return 0
    nbytes = (bits + 7) // 8
    mask = (1 << bits) - 1
    for _ in range(MAX_REJECTIONS):
        x = int.from_bytes(rng.bytes(nbytes), "little") & mask
        if x < bound:
            return x
    raise RuntimeError(f"{MAX_REJECTIONS} consecutive rejections; RNG is broken")


def uniform_below_array(bound: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Vectorised :func:`uniform_below` for ``bound <= 2**62``."""
    if not 1 <= bound <= SMALL_BOUND:
        raise ValueError(f"bound must lie in [1, 2**62], got {bound}")
    bits = (bound - 1).bit_length()
    if bits == 0:
        return np.zeros(size, dtype=np.int64)
    out = np.empty(0, dtype=np.int64)
    for _ in range(MAX_REJECTIONS):
        need = size - out.size
        if need <= 0:
            return out[:size]
        # power-of-two range: numpy returns raw masked bits
        draw = rng.integers(0, 1 << bits, size=need + need // 2 + 16, dtype=np.int64)
        out = np.concatenate((out, draw[draw < bound]))
    raise RuntimeError(f"{MAX_REJECTIONS} rejection rounds; RNG is broken")


def summand_counts_array(values: np.ndarray) -> np.ndarray:
    """Greedy summand counts for an int64 array (top-down scan over the terms)."""
    rem = values.astype(np.int64, copy=True)
    top = int(rem.max()) if rem.size else 0
    hi = TABLE.cover(top)
    counts = np.zeros(rem.shape, dtype=np.int64)
    for t in reversed(TABLE.terms[:hi]):
        take = rem >= t
        rem -= take * np.int64(t)
        counts += take
    return counts


def _worker(args) -> Counter:
    bound, n_samples, rng = args
    tally: Counter = Counter()
    if bound <= SMALL_BOUND:
        left = n_samples
        while left:
            size = min(left, BATCH)
            ks = summand_counts_array(uniform_below_array(bound, size, rng))
            vals, cnt = np.unique(ks, return_counts=True)
            tally.update(dict(zip(vals.tolist(), cnt.tolist())))
            left -= size
    else:
        TABLE.extend(2 * bound.bit_length() + 2)
        for _ in range(n_samples):
            tally[summand_count(uniform_below(bound, rng))] += 1
    return tally


def shares(count: int, workers: int) -> list[int]:
    base, extra = divmod(count, workers)
    return [base + (w < extra) for w in range(workers)]


def n_eff(bound: int) -> int:
    """Largest ``n`` with ``a(2n+1) <= bound`` (0 if there is none)."""
    TABLE.cover(bound)
    n = 0
    while TABLE[2 * n + 3] <= bound:
        n += 1
    return n


def run_experiment(cfg: SampleConfig) -> SampleReport:
    TABLE.extend(2 * cfg.bound.bit_length() + 4)
    jobs = [(cfg.bound, k, rng)
            for k, rng in zip(shares(cfg.count, cfg.workers), worker_rngs(cfg.seed, cfg.workers))]
    if cfg.workers == 1:
        tallies = [_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            tallies = list(pool.map(_worker, jobs))
    hist: Counter = Counter()
    for t in tallies:
        hist.update(t)

    n = cfg.count
    mean = Fraction(sum(k * c for k, c in hist.items()), n)
    var = sum((k - mean) ** 2 * c for k, c in hist.items()) / n
    ne = n_eff(cfg.bound)
    pmu, pvar = asymptotic_moments(ne)
    emu, evar = moments_below(cfg.bound)
    return SampleReport(
        count=n, bound=cfg.bound,
        empirical_mean=float(mean), empirical_std=math.sqrt(var),
        predicted_mean=pmu, predicted_std=math.sqrt(pvar), n_eff=ne,
        exact_mean=float(emu), exact_std=math.sqrt(evar),
        histogram=dict(sorted(hist.items())),
    )


HISTOGRAM_CSV_FIELDS = ("k", "count", "frequency")


def write_histogram_csv(report: SampleReport, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=HISTOGRAM_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for k, c in report.histogram.items():
        writer.writerow({"k": k, "count": c, "frequency": c / report.count})


def summary_dict(report: SampleReport) -> dict:
    d = asdict(report)
    d["bound"] = str(report.bound)
    d["histogram"] = {str(k): c for k, c in report.histogram.items()}
    return d


def write_summary_json(report: SampleReport, fh) -> None:
    json.dump({"schema_version": 1, **summary_dict(report)}, fh, indent=2)
