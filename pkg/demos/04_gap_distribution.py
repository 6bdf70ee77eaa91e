"""
Gaps between summands
=====================

Exact gap counts by brute force and by summing over the starting index, and
their approach to the limiting law P(3) = 1/8, P(2j) = 2^-j,
P(2j+1) = (3/4) 2^-j.
"""

from kentucky import gap_histogram_bruteforce, gap_histogram_formula, limit_p, pn_of_g

for n in (3, 8, 12):
    brute = gap_histogram_bruteforce(n)
    formula = gap_histogram_formula(n)
    print(f"n={n:2d}: {brute.counts}  formula agrees: {brute.counts == formula.counts}")

print(f"\n{'g':>3} {'P_20':>10} {'P_200':>10} {'limit':>10}")
for g in range(3, 13):
    print(f"{g:3d} {float(pn_of_g(20, g)):10.6f} {float(pn_of_g(200, g)):10.6f}"
          f" {float(limit_p(g)):10.6f}")
