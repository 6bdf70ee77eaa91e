"""
Monte Carlo: summands of random 600-digit integers
==================================================

Draw integers uniformly from [0, 10^600), decompose them, and histogram the
number of summands.  Set COUNT lower for a quick look; 200,000 draws take
about a minute on one core.
"""

import math

from kentucky import SampleConfig, run_experiment
from kentucky.sampler import write_histogram_csv, write_summary_json

COUNT = 200_000

report = run_experiment(SampleConfig(count=COUNT, bound=10 ** 600, seed=42))

print(f"empirical mean {report.empirical_mean:.3f}, std {report.empirical_std:.3f}")
print(f"exact for [0, 10^600): mean {report.exact_mean:.3f}, std {report.exact_std:.3f}")
print(f"asymptotics at n={report.n_eff}: mean {report.predicted_mean:.3f}, "
      f"std {report.predicted_std:.3f}")

# 10^600 sits between a(3985) and a(3987); the n = 2000 asymptotics
# (666.889, 12.176) describe the larger interval [0, a(4001)).
print(f"n = 2000 asymptotics: mean {2000 / 3 + 2 / 9:.3f}, "
      f"std {math.sqrt(2 * 2000 / 27 + 8 / 81):.3f}")

with open("summands_histogram.csv", "w", newline="") as fh:
    write_histogram_csv(report, fh)
with open("summands_summary.json", "w") as fh:
    write_summary_json(report, fh)

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    ks = list(report.histogram)
    plt.bar(ks, [report.histogram[k] for k in ks], width=1.0)
    plt.xlabel("number of summands")
    plt.ylabel("count")
    plt.savefig("summands_histogram.png", dpi=120)
    print("wrote summands_histogram.png")
