"""The pyramid of ``P_n(z) = z^n`` and the type-B Eulerian numbers it carries.

``B_{n,k} = 2^n n! a_{n,k}`` where ``a`` is the pyramid of ``z^n``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .comb import binomial, euler_numbers, eulerian_a
from .exact import TruncSeries, ZPoly
from .transforms import PreconditionError, PyramidRow

__all__ = [
    "monomial_pyramid",
    "b_row",
    "b_explicit_printed",
    "b_explicit",
    "b_gf_check",
    "euler_sum_check",
    "type_ab_relations",
    "descent_counts_a",
    "descent_counts_b",
    "NOT_REPRODUCIBLE",
]


def monomial_pyramid(n: int) -> PyramidRow:
    """``a_{n,k} = (1/(n! 2^n)) sum_{j<=n-k} (-1)^(n-k-j) C(n+1, n-k-j) (2j+1)^n``."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    scale = Fraction(1, math.factorial(n) * 2**n)
    entries = []
    for k in range(n + 1):
        s = sum((-1) ** (n - k - j) * binomial(n + 1, n - k - j) * (2 * j + 1) ** n for j in range(n - k + 1))
        entries.append(s * scale)
    return PyramidRow(n, tuple(entries))


def b_row(n: int) -> list[int]:
    out = []
    for a in monomial_pyramid(n):
        v = a * (2**n * math.factorial(n))
        if not v.is_real() or v.re.denominator != 1:
            raise ArithmeticError(f"B_{{{n},k}} is not an integer: {v}")
        out.append(int(v.re))
    return out


def b_explicit_printed(n: int, k: int) -> int:
    """The explicit sum exactly as displayed for ``B_{n,n-k}``:
    ``(-1)^n sum_{j<=k} (-1)^j C(n+1, 2k+1-j) (2k+1-2j)^n``."""
    return (-1) ** n * sum((-1) ** j * binomial(n + 1, 2 * k + 1 - j) * (2 * k + 1 - 2 * j) ** n for j in range(k + 1))


def b_explicit(n: int, k: int) -> int:
    """``B_{n,k} = sum_{j<=k} (-1)^j C(n+1, j) (2k+1-2j)^n``, the type-B analogue
    of the type-A sum ``sum_j (-1)^j C(n+1, j) (k+1-j)^n``."""
    return sum((-1) ** j * binomial(n + 1, j) * (2 * k + 1 - 2 * j) ** n for j in range(k + 1))


def _text(v) -> str:
    return v.to_text("x") if isinstance(v, ZPoly) else str(v)


NOT_REPRODUCIBLE = "not reproducible as printed"


def _entry(identity, n, lhs, rhs, printed=False):
    # a displayed formula that does not hold is a finding, not a suite failure
    miss = NOT_REPRODUCIBLE if printed else "fail"
    d = {"identity": identity, "n": n, "status": "pass" if lhs == rhs else miss}
    if lhs != rhs:
        d["lhs"] = _text(lhs)
        d["rhs"] = _text(rhs)
    return d


def b_gf_check(N: int) -> list[dict]:
    """Expand ``(1-x) e^((1-x)z) / (1 - x e^(2z(1-x)))`` in ``z`` to order N with
    coefficients in Q[x] and compare ``n! [z^n]`` with the rows B_n.

    Writing ``u = e^(2z(1-x)) - 1``, every coefficient of ``u`` is divisible
    by ``1 - x`` and the denominator becomes ``(1-x)(1 - x u/(1-x))``, so
    the series reciprocal applies.
    """
    if N < 1:
        raise PreconditionError("N must be at least 1")
    one_minus_x = ZPoly((1, -1))
    x = ZPoly((0, 1))
    u = (TruncSeries.variable(N) * (one_minus_x * 2)).exp() - 1
    v = TruncSeries([0] + [x * ZPoly._coerce(u[k]).exact_div(one_minus_x) for k in range(1, N + 1)], N)
    gf = (TruncSeries.variable(N) * one_minus_x).exp() * (1 - v).reciprocal()
    report = []
    for n in range(N + 1):
        coeff = ZPoly._coerce(gf[n]) * math.factorial(n)
        expected = ZPoly(b_row(n))
        report.append(_entry("bivariate gf", n, coeff, expected))
        # x -> 1: the monomial pyramid rows are normalized
        report.append(_entry("x=1 normalization", n, sum(monomial_pyramid(n)), 1))
    return report


def euler_sum_check(N: int) -> list[dict]:
    """``sum_k (-1)^k B_{n,k} = 2^n E_n`` for n <= N."""
    if N < 0:
        raise PreconditionError("N must be non-negative")
    E = euler_numbers(N)
    return [
        _entry("alternating sum", n, sum((-1) ** k * b for k, b in enumerate(b_row(n))), 2**n * E[n])
        for n in range(N + 1)
    ]


def _series_times(poly: list[int], n_power: int, base, K: int) -> list[int]:
    # (1-x)^(n+1) * sum_{k<=K} base(k)^n x^k, truncated at x^K
    series = [base(k) ** n_power for k in range(K + 1)]
    factor = ZPoly((1, -1)) ** (n_power + 1)
    prod = ZPoly(series) * factor
    return [int(prod[k].re) for k in range(K + 1)]


def type_ab_relations(N: int) -> list[dict]:
    """(a) the displayed polynomial connections ``B_2n = (1-x)^n A_n`` and
    ``B_(2n+1) = (1-x)^n A_(n+1)``, reported with a witness when they do
    not hold as printed; (b) the rational generating functions of A_n and
    B_n through ``x^(n+2)``; (c) the explicit sum for ``B_{n,n-k}``, both as
    displayed and in its corrected form, against :func:`b_row`."""
    if N < 1:
        raise PreconditionError("N must be at least 1")
    report = []
    for n in range(1, N // 2 + 1):
        A = ZPoly([eulerian_a(n, k) for k in range(n + 1)])
        B = ZPoly(b_row(2 * n))
        rhs = ZPoly((1, -1)) ** n * A
        report.append(_entry("B_2n = (1-x)^n A_n (as printed)", 2 * n, B, rhs, printed=True))
        if 2 * n + 1 <= N:
            A1 = ZPoly([eulerian_a(n + 1, k) for k in range(n + 2)])
            B1 = ZPoly(b_row(2 * n + 1))
            report.append(_entry("B_2n+1 = (1-x)^n A_n+1 (as printed)", 2 * n + 1, B1, ZPoly((1, -1)) ** n * A1, printed=True))
    for n in range(1, N + 1):
        K = n + 2
        b = b_row(n)
        got = _series_times(b, n, lambda k: 2 * k + 1, K)
        report.append(_entry("B_n(x) = (1-x)^(n+1) sum (2k+1)^n x^k", n, got, b + [0] * (K - n)))
        a = [eulerian_a(n, k) for k in range(n + 1)]
        got_a = _series_times(a, n, lambda k: k + 1, K)
        report.append(_entry("A_n(x) = (1-x)^(n+1) sum (k+1)^n x^k", n, got_a, a + [0] * (K - n)))
    for n in range(0, N + 1):
        b = b_row(n)
        as_printed = [b_explicit_printed(n, k) for k in range(n + 1)]
        corrected = [b_explicit(n, k) for k in range(n + 1)]
        report.append(_entry("explicit B_{n,n-k} (as printed)", n, as_printed, b[::-1], printed=True))
        report.append(_entry("explicit B_{n,k} (corrected)", n, corrected, b))
    return report


# -- brute-force descent counts (tiny n only) -------------------------------------------------


def descent_counts_a(n: int) -> list[int]:
    """Permutations of [n] by number of descents, with pi(0) = 0."""
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(1, n + 1)):
        seq = (0,) + perm
        counts[sum(seq[i - 1] > seq[i] for i in range(1, n + 1))] += 1
    return counts


def descent_counts_b(n: int) -> list[int]:
    """Signed permutations of [n] by number of descents, with pi(0) = 0."""
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            seq = (0,) + tuple(s * p for s, p in zip(signs, perm))
            counts[sum(seq[i - 1] > seq[i] for i in range(1, n + 1))] += 1
    return counts
