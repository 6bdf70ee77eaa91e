"""
The Kentucky-2 sequence and its legal decompositions
=====================================================

Terms come in bins of two.  A legal decomposition never uses two terms from
one bin, nor terms from neighbouring bins.
"""

from kentucky import (
    TABLE, build_constructive, decompose, enumerate_all, gaps_of, term_closed_form, terms,
)

###############################################################################
# The first eight bins, built from the recurrence a(n) = a(n-2) + 2 a(n-4)
first = terms(16)
print("bins:", [tuple(first[i:i + 2]) for i in range(0, 16, 2)])

# Even-indexed terms are powers of two; odd ones sit within 1/3 of 2^(k+1)/3
print("a(2000) == 2**1000:", term_closed_form(2000) == 2 ** 1000)
print("a(19) =", term_closed_form(19))

###############################################################################
# The same terms fall out of a purely combinatorial rule: keep adjoining the
# smallest integer that cannot yet be written legally.
print("constructive (1,2):", build_constructive(1, 2, 12))
print("constructive (1,1):", build_constructive(1, 1, 10), "<- Fibonacci")
print("constructive (2,2):", build_constructive(2, 2, 12))

###############################################################################
# Greedy decompositions
for m in (6, 9, 10455, 10 ** 30):
    d = decompose(m)
    print(f"{m} -> indices {list(d.indices)}  gaps {dict(gaps_of(d))}")

# 9 is not a term, and has exactly one legal representation
print("all legal representations of 9:", [d.indices for d in enumerate_all(9, 8)])

###############################################################################
# Exhaustive check of uniqueness below a(21)
bad = [m for m in range(TABLE[21]) if len(enumerate_all(m, 20)) != 1]
print(f"integers below a(21) = {TABLE[21]} without a unique decomposition: {bad}")
