"""Exact combinatorial numbers used throughout the package.

Stirling numbers of the first kind are *signed*:
``x(x-1)...(x-n+1) = sum_k s(n, k) x^k``, so ``s(3, 2) == -3``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import TruncSeries

__all__ = [
    "binomial",
    "stirling1",
    "stirling1_row",
    "rising_factorial",
    "euler_numbers",
    "fib_lucas",
    "eulerian_a",
    "eulerian_a_row",
]


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 and for 0 <= a < b.

    Negative ``a`` uses the upper-negation rule C(a, b) = (-1)^b C(b-a-1, b).
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    return (-1) ** b * math.comb(b - a - 1, b)


@lru_cache(maxsize=None)
def stirling1_row(n: int) -> tuple[int, ...]:
    """Row ``s(n, 0..n)`` built from s(n+1, k) = s(n, k-1) - n s(n, k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (1,)
    prev = stirling1_row(n - 1)
    m = n - 1
    row = [0] * (n + 1)
    for k in range(n + 1):
        left = prev[k - 1] if k >= 1 else 0
        right = prev[k] if k <= m else 0
        row[k] = left - m * right
    return tuple(row)


def stirling1(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return stirling1_row(n)[k]


def rising_factorial(x, n: int):
    """Shifted factorial ``(x)_n = x (x+1) ... (x+n-1)``; ``(x)_0 = 1``.

    Works for any ring element supporting ``+ int`` and ``*``
    (int, Fraction, GaussRat, ZPoly).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    result = 1
    for j in range(n):
        result = (x + j) * result
    return result


def euler_numbers(N: int) -> list[int]:
    """E_0..E_N from the exact series reciprocal of cosh."""
    sech = TruncSeries.cosh_series(N).reciprocal()
    out = []
    fact = 1
    for n in range(N + 1):
        if n:
            fact *= n
        value = Fraction(sech[n]) * fact
        assert value.denominator == 1
        out.append(int(value))
    return out


def fib_lucas(n: int) -> tuple[int, int]:
    """(F_n, L_n) with F_0=0, F_1=1, L_0=2, L_1=1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    f0, f1 = 0, 1
    l0, l1 = 2, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
        l0, l1 = l1, l0 + l1
    return f0, l0


def eulerian_a(n: int, k: int) -> int:
    """Type-A Eulerian number <n k> = sum_j (-1)^j C(n+1, j) (k+1-j)^n."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return sum((-1) ** j * binomial(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))


def eulerian_a_row(n: int) -> list[int]:
    return [eulerian_a(n, k) for k in range(n + 1)]
