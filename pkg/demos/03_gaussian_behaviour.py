"""
Gaussian behaviour of the number of summands
============================================

Exact mean and variance for [0, a(2n+1)), compared with n/3 + 2/9 and
2n/27 + 8/81, and the distance of the normalised distribution from N(0, 1).
"""

import math

from kentucky import asymptotic_moments, exact_mean, exact_variance, gaussian_diagnostics
from kentucky.stats import write_pmf_csv

print(f"{'n':>5} {'mean':>14} {'n/3+2/9':>14} {'variance':>14} {'2n/27+8/81':>14}")
for n in (3, 10, 30, 60, 2000):
    mu, var = exact_mean(n), exact_variance(n)
    amu, avar = asymptotic_moments(n)
    print(f"{n:5d} {float(mu):14.9f} {amu:14.9f} {float(var):14.9f} {avar:14.9f}")

print("\nstd at n = 2000:", round(math.sqrt(exact_variance(2000)), 3))

###############################################################################
# Kolmogorov-Smirnov distance and log-MGF residuals shrink as n grows
for n in (50, 200, 800):
    d = gaussian_diagnostics(n)
    res = ", ".join(f"t={t:+g}: {r:.4f}" for t, r in d.mgf_residuals.items() if t)
    print(f"n={n:4d}  KS={d.ks_to_normal:.4f}  |log M(t) - t^2/2|: {res}")

###############################################################################
# Plot-ready pmf for n = 2000
with open("pmf_n2000.csv", "w", newline="") as fh:
    write_pmf_csv(2000, fh)
print("wrote pmf_n2000.csv")
