"""Exact arithmetic for the Kentucky-2 sequence and its legal decompositions."""

from .counting import (
    fib_poly, fib_poly_derivative, fib_poly_eval, fib_poly_radical, fib_poly_sum,
    gn_fibform, gn_poly, gn_radical, pnk_closed, pnk_from_gf, pnk_recurrence, pnk_row,
    summand_count_table,
)
from .decomp import Decomposition, decompose, enumerate_all, gaps_of, is_legal, summand_count
from .gaps import (
    GapHistogram, gap_count_formula, gap_histogram_bruteforce, gap_histogram_formula,
    limit_p, pn_of_g, total_gaps,
)
from .kernel import (
    TABLE, BudgetExceeded, InvariantError, SequenceTable, bin_of, build_constructive,
    term_closed_form, terms,
)
from .sampler import SampleConfig, SampleReport, run_experiment, uniform_below
from .stats import (
    DistributionSummary, asymptotic_moments, exact_mean, exact_variance,
    gaussian_diagnostics, moments_below, pmf, variance_closed_form,
)

__version__ = "0.1.0"
