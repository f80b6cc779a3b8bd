"""Pyramids and their polynomials.

A pyramid row ``a_{n,0..n}`` weights the words ``q^k p^n q^(n-k)``; its image
in the quotient algebra is a polynomial ``P_n(z)`` of degree at most ``n``.
The maps in both directions are mutually inverse linear bijections.

Two routes are kept for each direction so they can check each other:

* pyramid -> polynomial: the Q-basis sum (:func:`pyramid_to_poly`) and the
  expanded Stirling-number coefficient formula (:func:`pyramid_to_poly_stirling`);
* polynomial -> pyramid: direct alternating sum over the nodes ``i(j + 1/2)``
  (:func:`poly_to_pyramid`) and the Hankel-inverse solve of the
  interpolation system (:func:`poly_to_pyramid_hankel`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .comb import binomial, stirling1
from .exact import HALF, I, ONE, ZERO, GaussRat, ZPoly, as_gauss

__all__ = [
    "PyramidRow",
    "PreconditionError",
    "pyramid_to_poly",
    "pyramid_to_poly_stirling",
    "poly_to_pyramid",
    "poly_to_pyramid_expanded",
    "poly_to_pyramid_hankel",
    "q_basis",
    "hankel_matrix",
    "hankel_inverse",
    "basis_matrix",
    "basis_det",
    "det",
    "outer_diagonal",
    "interpolation_values",
    "predicates",
    "integerize",
    "i_pow",
]


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def i_pow(n: int) -> GaussRat:
    return (ONE, I, -ONE, -I)[n % 4]


@dataclass(frozen=True)
class PyramidRow:
    """Row ``n`` of a pyramid: the entries ``a_{n,0}, ..., a_{n,n}``."""

    n: int
    entries: tuple[GaussRat, ...]

    def __post_init__(self):
        entries = tuple(as_gauss(a) for a in self.entries)
        if self.n < 0:
            raise PreconditionError("row index must be non-negative")
        if len(entries) != self.n + 1:
            raise PreconditionError(f"row {self.n} needs {self.n + 1} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, entries: Sequence) -> "PyramidRow":
        return cls(len(entries) - 1, tuple(entries))

    def __getitem__(self, k: int) -> GaussRat:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> GaussRat:
        return sum(self.entries, ZERO)

    @property
    def normalized(self) -> bool:
        return self.total() == ONE

    @property
    def symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    @property
    def hermitian_symmetric(self) -> bool:
        return all(a == b.conj() for a, b in zip(self.entries, reversed(self.entries)))

    @property
    def real(self) -> bool:
        return all(a.is_real() for a in self.entries)

    def __str__(self):
        return "[" + ", ".join(str(a) for a in self.entries) + "]"


def _row(row) -> PyramidRow:
    return row if isinstance(row, PyramidRow) else PyramidRow.of(list(row))


# -- Q basis ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_basis(n: int, k: int) -> ZPoly:
    """``Q_{n,k}(z) = C(-iz - 1/2 + k, n) = (1/n!) prod_{l<n} (-iz - 1/2 + k - l)``."""
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")
    poly = ZPoly((1,))
    for ell in range(n):
        poly = poly * ZPoly((GaussRat(Fraction(-1, 2) + k - ell), -I))
    return poly * Fraction(1, math.factorial(n))


def pyramid_to_poly(row) -> ZPoly:
    """``P_n(z) = i^n n! sum_k a_{n,k} Q_{n,k}(z)``.

    >>> str(pyramid_to_poly(["1/4", "1/2", "1/4"]))
    'z^2 - 1/4'
    """
    row = _row(row)
    n = row.n
    acc = ZPoly()
    for k, a in enumerate(row.entries):
        if a:
            acc = acc + q_basis(n, k) * a
    return acc * (i_pow(n) * math.factorial(n))


def pyramid_to_poly_stirling(row) -> ZPoly:
    """Coefficient-level form:
    ``b_{n,r} = (-1)^r i^(n+r) sum_l a_{n,l} sum_j s(n, j+r) C(j+r, r) (l - 1/2)^j``.
    """
    row = _row(row)
    n = row.n
    coeffs = []
    for r in range(n + 1):
        total = ZERO
        for ell, a in enumerate(row.entries):
            if not a:
                continue
            x = Fraction(2 * ell - 1, 2)
            inner = sum(
                (stirling1(n, j + r) * binomial(j + r, r) * x**j for j in range(n - r + 1)),
                Fraction(0),
            )
            total = total + a * inner
        coeffs.append(total * ((-1) ** r) * i_pow(n + r))
    return ZPoly(coeffs)


# -- polynomial -> pyramid ------------------------------------------------------------------


def _check_degree(P: ZPoly, n: int):
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if P.degree > n:
        raise PreconditionError(f"polynomial degree {P.degree} exceeds n = {n}")


def poly_to_pyramid(P: ZPoly, n: int) -> PyramidRow:
    """``a_{n,k} = (1/(i^n n!)) sum_{j=0}^{n-k} (-1)^(n-k-j) C(n+1, n-k-j) P(i(j + 1/2))``."""
    P = P if isinstance(P, ZPoly) else ZPoly(P)
    _check_degree(P, n)
    values = [P(I * (j + HALF)) for j in range(n + 1)]
    scale = (i_pow(n) * math.factorial(n)).inverse()
    entries = []
    for k in range(n + 1):
        acc = ZERO
        for j in range(n - k + 1):
            c = (-1) ** (n - k - j) * binomial(n + 1, n - k - j)
            acc = acc + values[j] * c
        entries.append(acc * scale)
    return PyramidRow(n, tuple(entries))


def poly_to_pyramid_expanded(P: ZPoly, n: int) -> PyramidRow:
    """Same map with ``P`` expanded term by term:
    ``sum_r b_{n,r} i^r (j + 1/2)^r`` replaces ``P(i(j + 1/2))``."""
    P = P if isinstance(P, ZPoly) else ZPoly(P)
    _check_degree(P, n)
    scale = (i_pow(n) * math.factorial(n)).inverse()
    entries = []
    for k in range(n + 1):
        acc = ZERO
        for j in range(n - k + 1):
            inner = ZERO
            for r in range(n + 1):
                b = P[r]
                if b:
                    inner = inner + b * i_pow(r) * Fraction(2 * j + 1, 2) ** r
            acc = acc + inner * ((-1) ** (n - k - j) * binomial(n + 1, n - k - j))
        entries.append(acc * scale)
    return PyramidRow(n, tuple(entries))


def hankel_matrix(n: int) -> list[list[int]]:
    """``M_n = [C(i+j, n)]_{0<=i,j<=n}``."""
    return [[binomial(i + j, n) for j in range(n + 1)] for i in range(n + 1)]


def hankel_inverse(n: int) -> list[list[int]]:
    """``M_n^{-1} = [(-1)^(n-i-j) C(n+1, i+j+1)]``."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return [[(-1) ** ((n - i - j) % 2) * binomial(n + 1, i + j + 1) for j in range(n + 1)] for i in range(n + 1)]


def interpolation_values(row) -> list[GaussRat]:
    """``i^n n! sum_l C(n+l, l) a_{n, n-m+l}`` for m = 0..n; equals ``P_n(i(m + 1/2))``."""
    row = _row(row)
    n = row.n
    scale = i_pow(n) * math.factorial(n)
    out = []
    for m in range(n + 1):
        acc = ZERO
        for ell in range(m + 1):
            acc = acc + row[n - m + ell] * binomial(n + ell, ell)
        out.append(acc * scale)
    return out


def poly_to_pyramid_hankel(P: ZPoly, n: int) -> PyramidRow:
    """Solve ``P(i(m + 1/2)) / (i^n n!) = sum_k C(m+k, n) a_k`` with the Hankel inverse."""
    P = P if isinstance(P, ZPoly) else ZPoly(P)
    _check_degree(P, n)
    scale = (i_pow(n) * math.factorial(n)).inverse()
    v = [P(I * (m + HALF)) * scale for m in range(n + 1)]
    inv = hankel_inverse(n)
    entries = []
    for k in range(n + 1):
        acc = ZERO
        for m in range(n + 1):
            if inv[k][m]:
                acc = acc + v[m] * inv[k][m]
        entries.append(acc)
    return PyramidRow(n, tuple(entries))


# -- basis determinant ----------------------------------------------------------------------


def det(matrix: Sequence[Sequence]) -> Fraction | GaussRat:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result = result * p
        for r in range(col + 1, size):
            if a[r][col]:
                f = a[r][col] / p
                for c in range(col, size):
                    a[r][c] = a[r][c] - f * a[col][c]
    return result


def basis_matrix(n: int) -> list[list[Fraction]]:
    """``S_{r,k} = sum_j s(n, j+r) C(j+r, r) (k - 1/2)^j``."""
    return [
        [
            sum(
                (stirling1(n, j + r) * binomial(j + r, r) * Fraction(2 * k - 1, 2) ** j for j in range(n - r + 1)),
                Fraction(0),
            )
            for k in range(n + 1)
        ]
        for r in range(n + 1)
    ]


def basis_det(n: int) -> Fraction:
    """Determinant of the Q-basis coefficient matrix; ``|det| = prod_{k<=n} k^k``."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return det(basis_matrix(n))


# -- outer diagonal / predicates ---------------------------------------------------------------


def outer_diagonal(P: ZPoly, n: int | None = None) -> GaussRat:
    """``a_{n,n} = P_n(i/2) / (i^n n!)``; ``n`` defaults to the degree of ``P``."""
    P = P if isinstance(P, ZPoly) else ZPoly(P)
    if n is None:
        n = max(P.degree, 0)
    _check_degree(P, n)
    return P(I * HALF) / (i_pow(n) * math.factorial(n))


def predicates(row, P: ZPoly | None = None) -> dict:
    """Structural report for a row and its polynomial.

    Each statement is evaluated directly on both sides so that the
    equivalences (normalized <=> monic, hermitian-symmetric <=> real
    coefficients) and the implication (real symmetric => parity of n) can
    be checked rather than assumed.
    """
    row = _row(row)
    if P is None:
        P = pyramid_to_poly(row)
    n = row.n
    monic = P.degree == n and P.leading() == ONE
    parity = P.parity()
    real_symmetric = row.real and row.symmetric
    parity_consistent = parity == n % 2
    return {
        "n": n,
        "normalized": row.normalized,
        "monic": monic,
        "normalized_iff_monic": row.normalized == monic,
        "hermitian_symmetric": row.hermitian_symmetric,
        "real_coefficients": P.is_real(),
        "hermitian_iff_real": row.hermitian_symmetric == P.is_real(),
        "real_symmetric": real_symmetric,
        "parity": parity,
        "parity_consistent": parity_consistent,
        "symmetric_implies_parity": (not real_symmetric) or parity_consistent,
    }


def integerize(row) -> list[int]:
    """Scale a real row to coprime integers (multiply by the LCM of the
    denominators, divide by the GCD of the numerators); ratios are kept."""
    row = _row(row)
    if not row.real:
        raise PreconditionError("integerize requires a real row")
    values = [a.re for a in row.entries]
    lcm = reduce(lambda x, y: x * y // math.gcd(x, y), (v.denominator for v in values), 1)
    ints = [int(v * lcm) for v in values]
    g = reduce(math.gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return ints
    return [x // g for x in ints]
