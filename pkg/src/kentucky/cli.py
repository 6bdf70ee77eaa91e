"""Command-line front end.

Every subcommand takes ``--format json|csv|plain`` (default from the
``KENTUCKY_FORMAT`` environment variable, else ``plain``).  JSON output is one
object carrying ``schema_version``; big integers are written as decimal
strings.  Exit codes: 2 usage, 3 budget exceeded, 4 internal cross-check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import counting, decomp, gaps, kernel, sampler, stats
from .kernel import BudgetExceeded, InvariantError

SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "plain")
EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 2, 3, 4


class UsageError(ValueError):
    pass


def parse_nat(text: str) -> int:
    """Non-negative integer in decimal or ``B^K`` notation (e.g. ``10^600``)."""
    text = text.strip().replace("_", "")
    try:
        if "^" in text:
            base, exp = text.split("^", 1)
            value = int(base) ** int(exp)
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(command: str, payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": command, **payload},
                      indent=2) + "\n"


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantError(message)


# -- subcommands ---------------------------------------------------------------


def cmd_seq(args) -> str:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    if args.constructive:
        values = kernel.build_constructive(args.s, args.b, args.terms)
    else:
        if (args.s, args.b) != (1, 2):
            raise UsageError("only (s, b) = (1, 2) has a recurrence; use --constructive")
        values = kernel.terms(args.terms)
        _check(all(v == kernel.term_closed_form(i) for i, v in enumerate(values, 1)),
               "recurrence disagrees with closed form")
    if args.format == "json":
        return _json("seq", {"s": args.s, "b": args.b, "constructive": args.constructive,
                             "terms": [str(v) for v in values]})
    if args.format == "csv":
        return _csv(("index", "term"), enumerate(values, 1))
    return " ".join(map(str, values)) + "\n"


def cmd_decompose(args) -> str:
    records = []
    for m in args.values:
        d = decomp.decompose(m)
        terms = d.terms()
        _check(sum(terms) == m and decomp.is_legal(d.indices), f"bad decomposition of {m}")
        records.append((m, d, terms))
    if args.format == "json":
        return _json("decompose", {"results": [
            {"m": str(m), "indices": list(d.indices), "terms": [str(t) for t in terms],
             "bins": d.bins, "gaps": d.gaps} for m, d, terms in records]})
    if args.format == "csv":
        sp = lambda xs: " ".join(map(str, xs))  # noqa: E731
        return _csv(("m", "indices", "terms", "bins", "gaps"),
                    [(m, sp(d.indices), sp(t), sp(d.bins), sp(d.gaps)) for m, d, t in records])
    lines = []
    for m, d, terms in records:
        lines.append(f"{m} = " + (" + ".join(map(str, terms)) if terms else "(empty)"))
        lines.append(f"  indices {list(d.indices)}  bins {d.bins}  gaps {d.gaps}")
    return "\n".join(lines) + "\n"


def cmd_count(args) -> str:
    n = args.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    row = counting.pnk_row(n)
    _check(sum(row) == kernel.TABLE[2 * n + 1], "row sum differs from a(2n+1)")
    _check(row == counting.pnk_from_gf(n), "closed form differs from generating function")
    if args.format == "json":
        return _json("count", {"n": n, "row": [str(p) for p in row],
                               "row_sum": str(sum(row))})
    if args.format == "csv":
        return _csv(("n", "k", "p"), [(n, k, p) for k, p in enumerate(row)])
    return "\n".join(f"p({n},{k}) = {p}" for k, p in enumerate(row)) + "\n"


def cmd_stats(args) -> str:
    n = args.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    mu, var = stats.exact_mean(n), stats.exact_variance(n)
    _check(var == stats.variance_closed_form(n), "variance differs from closed form")
    amu, avar = stats.asymptotic_moments(n)
    diag = None
    if args.diagnostics:
        if n < 2:
            raise UsageError("--diagnostics needs --n >= 2")
        diag = stats.gaussian_diagnostics(n)
    if args.format == "csv":
        buf = io.StringIO()
        stats.write_pmf_csv(n, buf)
        return buf.getvalue()
    if args.format == "json":
        payload = {"n": n, "mean": _frac(mu), "variance": _frac(var),
                   "asymptotic_mean": amu, "asymptotic_variance": avar}
        if diag:
            payload["ks_to_normal"] = diag.ks_to_normal
            payload["mgf_log_residual"] = diag.mgf_log_residual
            payload["mgf_residuals"] = {str(t): r for t, r in diag.mgf_residuals.items()}
        return _json("stats", payload)
    lines = [f"n = {n}",
             f"mean      = {mu}  ({float(mu):.12g}; asymptotic {amu:.12g})",
             f"variance  = {var}  ({float(var):.12g}; asymptotic {avar:.12g})",
             f"std       = {math.sqrt(var):.12g}"]
    if diag:
        lines.append(f"KS distance to N(0,1) = {diag.ks_to_normal:.6g}")
        for t, r in diag.mgf_residuals.items():
            lines.append(f"|log M({t:+g}) - t^2/2| = {r:.6g}")
    return "\n".join(lines) + "\n"


def cmd_gaps(args) -> str:
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.method == "enumerate":
        hist = gaps.gap_histogram_bruteforce(n)
    else:
        hist = gaps.gap_histogram_formula(n)
    _check(hist.total_gaps == gaps.total_gaps(n), "gap total differs from summand counts")
    g_max = max(2 * n - 1, 3)
    rows = list(gaps.gap_rows(hist, g_max))
    if args.format == "json":
        return _json("gaps", {"n": n, "total_gaps": str(hist.total_gaps),
                              "counts": {str(g): str(c) for g, c in hist.counts.items()},
                              "rows": [{**r, "count": str(r["count"])} for r in rows]})
    if args.format == "csv":
        buf = io.StringIO()
        gaps.write_gap_csv(hist, buf, g_max)
        return buf.getvalue()
    lines = [f"n = {n}, total gaps = {hist.total_gaps}"]
    lines += [f"g={r['g']}: {r['count']}  P_n={r['p_n_float']:.6g}  P={r['p_limit_float']:.6g}"
              for r in rows]
    return "\n".join(lines) + "\n"


def cmd_sample(args) -> str:
    cfg = sampler.SampleConfig(args.count, args.bound, args.seed, args.workers)
    report = sampler.run_experiment(cfg)
    _check(sum(report.histogram.values()) == cfg.count, "histogram does not sum to count")
    if args.histogram_csv:
        with open(args.histogram_csv, "w", newline="") as fh:
            sampler.write_histogram_csv(report, fh)
    if args.format == "json":
        return _json("sample", {**sampler.summary_dict(report), "seed": cfg.seed,
                                "workers": cfg.workers})
    if args.format == "csv":
        buf = io.StringIO()
        sampler.write_histogram_csv(report, buf)
        return buf.getvalue()
    return "\n".join([
        f"samples {report.count} below {args.bound_text}",
        f"empirical mean {report.empirical_mean:.6f}  std {report.empirical_std:.6f}",
        f"predicted (n={report.n_eff}) mean {report.predicted_mean:.6f}  "
        f"std {report.predicted_std:.6f}",
        f"exact for this bound mean {report.exact_mean:.6f}  std {report.exact_std:.6f}",
    ]) + "\n"


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get("KENTUCKY_FORMAT", "plain")
    if default_format not in FORMATS:
        default_format = "plain"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=default_format)

    parser = argparse.ArgumentParser(prog="kentucky",
                                     description="Kentucky-2 sequence toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="sequence terms")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--constructive", action="store_true",
                   help="build by adjoining the smallest non-representable integer")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("decompose", parents=[common], help="legal decompositions")
    p.add_argument("values", nargs="+", type=parse_nat, metavar="M")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("count", parents=[common], help="p(n, k) row")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("stats", parents=[common], help="exact moments of the summand count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagnostics", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gaps", parents=[common], help="gap-length counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "enumerate"), default="formula")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("sample", parents=[common], help="Monte Carlo summand counts")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--bound", type=str, required=True, help="exclusive bound, e.g. 10^600")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--histogram-csv", metavar="PATH")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sample":
        args.bound_text = args.bound
        try:
            args.bound = parse_nat(args.bound)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    try:
        out = args.func(args)
    except BudgetExceeded as exc:
        print(f"kentucky: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"kentucky: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"kentucky: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
