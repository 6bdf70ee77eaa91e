"""
Counting integers by number of summands
=======================================

p(n, k) counts the integers in [0, a(2n+1)) with exactly k summands.  We get
it from a recurrence, a binomial formula and a generating function, and then
evaluate the row polynomial g_n(y) three ways.
"""

from fractions import Fraction

from kentucky import (
    TABLE, fib_poly, fib_poly_eval, fib_poly_radical, gn_fibform, gn_poly, gn_radical,
    pnk_closed, pnk_from_gf, pnk_recurrence,
)

###############################################################################
# A few rows of the table
for n in range(8):
    row = pnk_from_gf(n)
    print(f"n={n}: {row}   sum={sum(row)} = a({2 * n + 1}) = {TABLE[2 * n + 1]}")

print("p(2000, 667) agrees:", pnk_recurrence(2000, 667) == pnk_closed(2000, 667))

###############################################################################
# Fibonacci polynomials: F_6(x) = x^5 + 4x^3 + 3x
print("F_6 coefficients:", fib_poly(6))
print("F_10(1) =", fib_poly_eval(10, 1))
x = Fraction(3, 2)
print(f"F_40(3/2): recurrence {float(fib_poly_eval(40, x)):.12e}"
      f"  radical {fib_poly_radical(40, 1.5):.12e}")

###############################################################################
# g_n(y) from its coefficients, the Fibonacci-polynomial identity (exact) and
# the partial-fraction closed form (floating point)
for y in (Fraction(1, 2), Fraction(1), Fraction(2)):
    n = 12
    coeff = sum(p * y ** k for k, p in enumerate(gn_poly(n)))
    print(f"g_{n}({y}): {coeff} | {gn_fibform(n, y)} | {gn_radical(n, float(y)):.6f}")
