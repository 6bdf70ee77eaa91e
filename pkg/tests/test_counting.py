import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest

from kentucky.counting import (
    fib_poly, fib_poly_derivative, fib_poly_eval, fib_poly_radical, fib_poly_sum,
    gn_fibform, gn_poly, gn_radical, pnk_closed, pnk_from_gf, pnk_recurrence, pnk_row,
    poly_derivative, poly_eval, series_coefficients, summand_count_table,
)
from kentucky.decomp import decompose
from kentucky.kernel import TABLE


def brute_rows(n):
    """Summand-count histogram over [0, a(2n+1)) by decomposing every integer."""
    c = Counter(len(decompose(m)) for m in range(TABLE[2 * n + 1]))
    return [c[k] for k in range(max(c) + 1)]


def test_brute_force_small_values():
    assert brute_rows(3) == [1, 6, 4]
    assert brute_rows(1) == [1, 2]
    assert brute_rows(0) == [1]


@pytest.mark.parametrize("n, k, expected", [(1, 1, 2), (3, 2, 4), (3, 1, 6), (5, 0, 1), (0, 1, 0)])
def test_pnk_values(n, k, expected):
    assert pnk_recurrence(n, k) == expected
    assert pnk_closed(n, k) == expected


def test_boundaries():
    for n in range(10):
        assert pnk_recurrence(n, 0) == pnk_closed(n, 0) == 1
        assert pnk_closed(n, (n + 1) // 2 + 1) == 0
        assert pnk_recurrence(n, (n + 1) // 2 + 1) == 0


def test_large_recurrence_vs_closed():
    assert pnk_recurrence(2000, 667) == pnk_closed(2000, 667)


def test_gf_rows():
    assert pnk_from_gf(0) == [1]
    assert pnk_from_gf(1) == [1, 2]
    assert pnk_from_gf(3) == [1, 6, 4]


def test_triple_agreement():
    table = summand_count_table(60)
    for n in range(61):
        row = list(table.rows[n])
        assert row == pnk_row(n) == pnk_from_gf(n)
        assert all(pnk_recurrence(n, k) == p for k, p in enumerate(row))
        assert table.row_sum(n) == TABLE[2 * n + 1]


def test_brute_force_agreement():
    for n in range(13):
        assert brute_rows(n) == pnk_row(n)


def test_series_expansion_of_geometric():
    # 1 / (1 - x) has all coefficients 1
    assert series_coefficients([[1]], [[1], [-1]], 5) == [[1]] * 5
    with pytest.raises(ValueError):
        series_coefficients([[1]], [[2], [-1]], 3)


def stars_and_bars_count(n, k):
    # non-negative solutions of y_1 + ... + y_{k+1} = n - k - (k-1)
    total = n - k - (k - 1)
    if total < 0:
        return 0
    return sum(1 for ys in itertools.product(range(total + 1), repeat=k)
               if sum(ys) <= total)


def test_stars_and_bars():
    for n in range(1, 13):
        for k in range(1, (n + 1) // 2 + 1):
            assert stars_and_bars_count(n, k) == math.comb(n - (k - 1), k)


# -- Fibonacci polynomials ---------------------------------------------------


def test_fib_values():
    assert fib_poly_eval(2, 5) == 5
    assert fib_poly_eval(10, 1) == 55
    assert fib_poly_eval(3, 2) == 5
    assert fib_poly_eval(0, 7) == 0
    assert fib_poly(4) == [0, 2, 0, 1]


def test_fib_sum_matches_recurrence():
    for n in range(40):
        for x in (Fraction(1, 2), Fraction(3), Fraction(-2, 7)):
            assert fib_poly_sum(n, x) == fib_poly_eval(n, x)


def test_fib_radical_matches_recurrence():
    for n in range(51):
        for x in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            exact = fib_poly_eval(n, x)
            assert math.isclose(fib_poly_radical(n, float(x)), float(exact), rel_tol=1e-9)


def test_fib_derivative_matches_coefficients():
    for n in range(1, 30):
        dcoeffs = poly_derivative(fib_poly(n))
        for x in (Fraction(1, 3), Fraction(2), Fraction(-5, 4)):
            assert fib_poly_derivative(n, x) == poly_eval(dcoeffs, x)
    assert fib_poly_derivative(0, Fraction(1)) == 0


# -- g_n(y) ------------------------------------------------------------------


def test_gn_examples():
    assert gn_poly(3) == [1, 6, 4]
    assert math.isclose(gn_radical(1, 1.0), 3.0, rel_tol=1e-12)
    assert gn_fibform(3, 1) == 11 == TABLE[7]


def test_gn_three_forms():
    for n in range(31):
        coeffs = gn_poly(n)
        for y in (Fraction(1), Fraction(2), Fraction(1, 2)):
            exact = poly_eval(coeffs, y)
            assert gn_fibform(n, y) == exact
            assert math.isclose(gn_radical(n, float(y)), float(exact), rel_tol=1e-9)


def test_gn_domain_errors():
    with pytest.raises(ValueError):
        gn_radical(3, 0.0)
    with pytest.raises(ValueError):
        gn_fibform(3, 0)


def test_gn_fibform_negative_y_still_exact():
    y = Fraction(-1, 3)
    assert gn_fibform(9, y) == poly_eval(gn_poly(9), y)
