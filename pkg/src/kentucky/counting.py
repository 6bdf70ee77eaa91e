"""Summand counts ``p(n, k)`` and their generating functions.

``p(n, k)`` is the number of integers in ``[0, a(2n+1))`` whose decomposition
has exactly ``k`` summands.  It is available three ways (the recurrence, the
binomial closed form, and a power-series expansion of the bivariate generating
function ``(1 + 2xy) / (1 - x - 2x^2 y)``), and the row polynomial
``g_n(y) = sum_k p(n, k) y^k`` is available in three more forms.

Polynomials are plain lists of coefficients, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# -- polynomial helpers (int or Fraction coefficients) -----------------------


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


# -- p(n, k) -----------------------------------------------------------------


def max_summands(n: int) -> int:
    return (n + 1) // 2 if n >= 0 else -1


def pnk_recurrence(n: int, k: int) -> int:
    """``p(n, k)`` from ``p(n, k) = 2 p(n-2, k-1) + p(n-1, k)``.

    Boundary rows: ``p(n, 0) = 1``, ``p(0, k) = 0`` for ``k > 0``,
    ``p(1, 1) = 2``.  Rows are rolled forward keeping only columns ``<= k``.
    """
    if n < 0 or k < 0:
        return 0
    width = k + 1
    row0 = [1] + [0] * k                       # n = 0
    if n == 0:
        return row0[k]
    row1 = [1] + ([2] if k >= 1 else []) + [0] * max(k - 1, 0)   # n = 1
    prev2, prev1 = row0, row1
    for _ in range(2, n + 1):
        cur = [1] + [2 * prev2[j - 1] + prev1[j] for j in range(1, width)]
        prev2, prev1 = prev1, cur
    return prev1[k]


def pnk_closed(n: int, k: int) -> int:
    """``2**k * C(n-k+1, k)``, with the table conventions outside its range."""
    if n < 0 or k < 0:
        return 0
    if k == 0:
        return 1
    if n < 2 * k - 1:
        return 0
    return (1 << k) * math.comb(n - k + 1, k)


def pnk_row(n: int) -> list[int]:
    """Row ``[p(n, 0), ..., p(n, floor((n+1)/2))]`` from the closed form."""
    return [pnk_closed(n, k) for k in range(max_summands(n) + 1)]


@dataclass(frozen=True)
class SummandCountTable:
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk):
        n, k = nk
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n])


@lru_cache(maxsize=8)
def summand_count_table(size: int) -> SummandCountTable:
    """Rows ``0..size`` built by the recurrence."""
    rows = [[1]]
    if size >= 1:
        rows.append([1, 2])
    for n in range(2, size + 1):
        width = max_summands(n) + 1
        p2, p1 = rows[n - 2], rows[n - 1]
        row = [1]
        for k in range(1, width):
            a = p2[k - 1] if k - 1 < len(p2) else 0
            b = p1[k] if k < len(p1) else 0
            row.append(2 * a + b)
        rows.append(row)
    return SummandCountTable(tuple(tuple(r) for r in rows))


# -- generating function -----------------------------------------------------

# coefficients in x, each a polynomial in y
GF_NUMERATOR = [[1], [0, 2]]               # 1 + 2xy
GF_DENOMINATOR = [[1], [-1], [0, -2]]      # 1 - x - 2x^2 y


def series_coefficients(numerator, denominator, count: int):
    """First ``count`` x-coefficients of ``numerator / denominator``.

    Both arguments are lists indexed by the power of x whose entries are
    polynomials in y.  The constant term of the denominator must be ``[1]``,
    which keeps integer coefficients integral.
    """
    if poly_trim(denominator[0]) != [1]:
        raise ValueError("denominator must have constant term 1")
    out = []
    for n in range(count):
        c = list(numerator[n]) if n < len(numerator) else []
        for j in range(1, min(n, len(denominator) - 1) + 1):
            c = poly_add(c, [-v for v in poly_mul(denominator[j], out[n - j])])
        out.append(poly_trim(c))
    return out


_gf_cache: list[list[int]] = []


def pnk_from_gf(n: int) -> list[int]:
    """Row ``n`` of ``p(n, k)`` read off the generating function's x^n coefficient."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n >= len(_gf_cache):
        _gf_cache[:] = series_coefficients(GF_NUMERATOR, GF_DENOMINATOR, 2 * n + 2)
    return list(_gf_cache[n])


# -- Fibonacci polynomials ---------------------------------------------------


def fib_poly(n: int) -> list[int]:
    """Coefficients of ``F_n(x) = sum_j C(n-j-1, j) x^(n-2j-1)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return []
    coeffs = [0] * n
    for j in range((n - 1) // 2 + 1):
        coeffs[n - 2 * j - 1] = math.comb(n - j - 1, j)
    return coeffs


def fib_poly_eval(n: int, x):
    """``F_n(x)`` by the recurrence ``F_n = x F_{n-1} + F_{n-2}``.

    Exact whenever ``x`` is an int or Fraction.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev, cur = 0, 1   # F_0, F_1
    if n == 0:
        return x * 0
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev
    return cur + x * 0


def fib_poly_sum(n: int, x):
    """``F_n(x)`` from the binomial sum."""
    return poly_eval(fib_poly(n), x)


def fib_poly_radical(n: int, x: float) -> float:
    """``F_n(x)`` from ``((x+r)^n - (x-r)^n) / (2^n r)``, ``r = sqrt(x^2+4)``."""
    r = math.sqrt(x * x + 4.0)
    return ((x + r) ** n - (x - r) ** n) / (2.0 ** n * r)


def fib_poly_derivative(n: int, x):
    """``F_n'(x) = (2n F_{n-1}(x) + (n-1) x F_n(x)) / (x^2 + 4)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return x * 0
    d = x * x + 4
    if d == 0:
        raise ZeroDivisionError("derivative formula undefined at x^2 = -4")
    num = 2 * n * fib_poly_eval(n - 1, x) + (n - 1) * x * fib_poly_eval(n, x)
    if isinstance(num, int) and isinstance(d, int):
        return Fraction(num, d)
    return num / d


# -- g_n(y) ------------------------------------------------------------------


def gn_poly(n: int) -> list[int]:
    """``g_n(y)`` as its coefficient list ``[p(n, 0), p(n, 1), ...]``."""
    return pnk_row(n)


class _QuadRing:
    """Elements ``p + q*u`` with ``u*u == c`` for a fixed rational ``c``."""

    __slots__ = ("p", "q", "c")

    def __init__(self, p, q, c):
        self.p, self.q, self.c = p, q, c

    def __add__(self, other):
        return _QuadRing(self.p + other.p, self.q + other.q, self.c)

    def __mul__(self, other):
        return _QuadRing(self.p * other.p + self.c * self.q * other.q,
                         self.p * other.q + self.q * other.p, self.c)


def gn_fibform(n: int, y) -> Fraction:
    """``g_n(y) = sqrt(2y)^(n+1) F_{n+2}(1/sqrt(2y))``, evaluated exactly.

    Works in ``Q[u]`` with ``u^2 = 2y`` and ``1/u = u/(2y)``; the ``u``-part
    of the result cancels identically, leaving a rational.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    y = Fraction(y)
    if y == 0:
        raise ValueError("g_n Fibonacci form needs y != 0")
    c = 2 * y
    zero = _QuadRing(Fraction(0), Fraction(0), c)
    x = _QuadRing(Fraction(0), 1 / c, c)
    prev, cur = zero, _QuadRing(Fraction(1), Fraction(0), c)   # F_0, F_1
    for _ in range(n + 1):
        prev, cur = cur, x * cur + prev
    # multiply by u^(n+1)
    half, odd = divmod(n + 1, 2)
    scale = c ** half
    res = _QuadRing(cur.p * scale, cur.q * scale, c)
    if odd:
        res = res * _QuadRing(Fraction(0), Fraction(1), c)
    if res.q != 0:
        raise ArithmeticError(f"irrational residue {res.q} in g_{n}({y})")
    return res.p


def gn_radical(n: int, y: float) -> float:
    """``g_n(y)`` from the partial-fraction closed form (floating point)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if y <= 0:
        raise ValueError(f"radical form of g_n needs y > 0, got {y}")
    r = math.sqrt(1.0 + 8.0 * y)
    plus, minus = 1.0 + r, 1.0 - r
    bracket = (4.0 * y * plus ** n - 4.0 * y * minus ** n
               + plus ** (n + 1) - minus ** (n + 1))
    return bracket / (2.0 ** (n + 1) * r)
