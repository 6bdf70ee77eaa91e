import io
from fractions import Fraction

import pytest

from kentucky import gaps
from kentucky.kernel import BudgetExceeded


def test_small_histograms():
    assert gaps.gap_histogram_bruteforce(3).counts == {3: 1, 4: 2, 5: 1}
    assert gaps.gap_histogram_bruteforce(3).total_gaps == 4
    assert gaps.gap_histogram_bruteforce(2).counts == {}


@pytest.mark.parametrize("g, expected", [(3, 1), (4, 2), (5, 1), (6, 0)])
def test_formula_n3(g, expected):
    assert gaps.gap_count_formula(3, g) == expected


def test_formula_matches_bruteforce():
    for n in range(3, 13):
        brute = gaps.gap_histogram_bruteforce(n)
        for g in range(0, 2 * n + 2):
            assert gaps.gap_count_formula(n, g) == brute[g], (n, g)
        assert brute.total_gaps == gaps.total_gaps(n)


def test_no_short_gaps():
    for n in range(1, 13):
        hist = gaps.gap_histogram_bruteforce(n)
        assert all(g >= 3 for g in hist.counts)


def test_include_wait():
    with_wait = gaps.gap_histogram_bruteforce(3, include_wait=True)
    plain = gaps.gap_histogram_bruteforce(3)
    # every non-zero m adds its first index
    assert with_wait.total_gaps - plain.total_gaps == 10


def test_budget():
    with pytest.raises(BudgetExceeded):
        gaps.gap_histogram_bruteforce(23)


def test_pn_of_g():
    assert gaps.pn_of_g(3, 4) == Fraction(1, 2)
    assert abs(gaps.pn_of_g(200, 3) - Fraction(1, 8)) < Fraction(1, 100)
    assert abs(gaps.pn_of_g(200, 6) - Fraction(1, 8)) < Fraction(1, 100)
    with pytest.raises(ZeroDivisionError):
        gaps.pn_of_g(2, 3)


def test_pn_sums_to_one():
    for n in (3, 10, 40):
        assert sum(gaps.pn_of_g(n, g) for g in range(3, 2 * n)) == 1


def test_limit_values():
    assert [gaps.limit_p(g) for g in range(3)] == [0, 0, 0]
    assert gaps.limit_p(3) == Fraction(1, 8)
    assert gaps.limit_p(4) == Fraction(1, 4)
    assert gaps.limit_p(5) == Fraction(3, 16)


def test_limit_normalisation():
    deficit = 1 - sum(gaps.limit_p(g) for g in range(3, 61))
    assert 0 < deficit < Fraction(1, 2 ** 28)


def test_convergence_at_200():
    for g in range(3, 11):
        assert abs(gaps.pn_of_g(200, g) - gaps.limit_p(g)) < Fraction(1, 100)


def test_normaliser_asymptotics():
    for n in (50, 100, 200):
        ratio = gaps.total_gaps(n) * Fraction(9, n * 2 ** (n + 2))
        assert abs(ratio - 1) < Fraction(5, 100)


def test_off_by_one_normaliser():
    for n in (3, 10, 50):
        assert gaps.off_by_one_normalizer(n) == Fraction(1, gaps.total_gaps(n) - 1)


def test_gap_csv():
    buf = io.StringIO()
    gaps.write_gap_csv(gaps.gap_histogram_formula(3), buf, g_max=5)
    assert buf.getvalue().splitlines() == [
        "g,count,p_n_float,p_limit_float",
        "3,1,0.25,0.125",
        "4,2,0.5,0.25",
        "5,1,0.25,0.1875",
    ]
