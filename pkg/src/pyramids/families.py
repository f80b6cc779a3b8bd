"""Named ordering families, classical polynomial families, and the checks
tying them to their pyramids (outer diagonals, generating functions)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .comb import binomial, fib_lucas
from .exact import ZPoly, TruncSeries
from .transforms import (
    PreconditionError,
    PyramidRow,
    integerize,
    outer_diagonal,
    poly_to_pyramid,
    pyramid_to_poly,
)

__all__ = [
    "OrderingFamily",
    "ORDERING_NAMES",
    "POLY_FAMILIES",
    "ordering_row",
    "ordering_poly",
    "family_poly",
    "classical_pyramid",
    "outer_diagonal_identities",
    "hermite_h",
    "legendre_outer_closed_form",
    "egf_checks",
]


@dataclass(frozen=True)
class OrderingFamily:
    """An ordering: ``symmetric``, ``born_jordan``, ``weyl``,
    ``binom_power`` (rows proportional to C(n,k)^power) or ``custom``."""

    tag: str
    power: int | None = None
    rows: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.tag not in ORDERING_NAMES:
            raise PreconditionError(f"unknown ordering family {self.tag!r}")
        if self.tag == "binom_power" and (self.power is None or self.power < 1):
            raise PreconditionError("binom_power needs a positive integer power")

    @classmethod
    def parse(cls, name: str, power: int | None = None) -> "OrderingFamily":
        key = name.replace("-", "_").lower()
        aliases = {"bornjordan": "born_jordan", "binom_pow": "binom_power", "binom": "binom_power"}
        key = aliases.get(key, key)
        if key.startswith("binom_power") and key != "binom_power":
            power = int(key.rsplit("_", 1)[1])
            key = "binom_power"
        return cls(key, power)

    @property
    def label(self) -> str:
        return f"binom_power({self.power})" if self.tag == "binom_power" else self.tag


ORDERING_NAMES = ("symmetric", "born_jordan", "weyl", "binom_power", "custom")
POLY_FAMILIES = ("legendre", "hermite", "chebyshev_t", "chebyshev_u", "monomial")


def ordering_row(f: OrderingFamily | str, n: int) -> PyramidRow:
    if isinstance(f, str):
        f = OrderingFamily.parse(f)
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if f.tag == "custom":
        if n >= len(f.rows):
            raise PreconditionError(f"custom family has no row {n}")
        return PyramidRow.of(list(f.rows[n]))
    if f.tag == "symmetric":
        if n == 0:
            return PyramidRow(0, (1,))
        return PyramidRow(n, tuple([Fraction(1, 2)] + [0] * (n - 1) + [Fraction(1, 2)]))
    if f.tag == "born_jordan":
        return PyramidRow(n, tuple([Fraction(1, n + 1)] * (n + 1)))
    if f.tag == "weyl":
        return PyramidRow(n, tuple(Fraction(binomial(n, k), 2**n) for k in range(n + 1)))
    weights = [binomial(n, k) ** f.power for k in range(n + 1)]
    total = sum(weights)
    return PyramidRow(n, tuple(Fraction(w, total) for w in weights))


def ordering_poly(f: OrderingFamily | str, n: int) -> ZPoly:
    return pyramid_to_poly(ordering_row(f, n))


@lru_cache(maxsize=None)
def _chebyshev(kind: str, n: int) -> ZPoly:
    if n == 0:
        return ZPoly((1,))
    if n == 1:
        return ZPoly((0, 1)) if kind == "t" else ZPoly((0, 2))
    z2 = ZPoly((0, 2))
    return z2 * _chebyshev(kind, n - 1) - _chebyshev(kind, n - 2)


def family_poly(tag: str, n: int) -> ZPoly:
    """Monic Legendre and Hermite, standard Chebyshev T and U, or ``z^n``."""
    tag = tag.replace("-", "_").lower()
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if tag == "legendre":
        coeffs = [Fraction(0)] * (n + 1)
        for m in range(n // 2 + 1):
            coeffs[n - 2 * m] = Fraction((-1) ** m * binomial(n, m) * binomial(2 * n - 2 * m, n), binomial(2 * n, n))
        return ZPoly(coeffs)
    if tag == "hermite":
        coeffs = [Fraction(0)] * (n + 1)
        for m in range(n // 2 + 1):
            coeffs[n - 2 * m] = Fraction(
                math.factorial(n) * (-1) ** m * 2 ** (n - 2 * m),
                2**n * math.factorial(m) * math.factorial(n - 2 * m),
            )
        return ZPoly(coeffs)
    if tag == "chebyshev_t":
        return _chebyshev("t", n)
    if tag == "chebyshev_u":
        return _chebyshev("u", n)
    if tag == "monomial":
        return ZPoly.monomial(n)
    raise PreconditionError(f"unknown polynomial family {tag!r}")


def classical_pyramid(tag: str, n: int) -> PyramidRow:
    return poly_to_pyramid(family_poly(tag, n), n)


# -- outer diagonals ----------------------------------------------------------------


def hermite_h(N: int) -> list[int]:
    """h_0..h_N from h_n = h_{n-1} + 2(n-1) h_{n-2}, h_1 = 1, h_2 = 3 (so h_0 = 1)."""
    h = [1, 1, 3]
    for n in range(3, N + 1):
        h.append(h[n - 1] + 2 * (n - 1) * h[n - 2])
    return h[: N + 1]


def legendre_outer_closed_form(n: int) -> Fraction:
    """``n!/(2^n (2n)!) sum_j 2^(2j) C(n,j) C(2n-2j, n)``."""
    s = sum(4**j * binomial(n, j) * binomial(2 * n - 2 * j, n) for j in range(n + 1))
    return Fraction(math.factorial(n) * s, 2**n * math.factorial(2 * n))


def outer_diagonal_identities(N: int, legendre_max: int | None = None) -> list[dict]:
    """Check the outer diagonals of the Chebyshev, Hermite and Legendre pyramids.

    Each entry is ``{identity, n, lhs, rhs, status}`` with exact values in
    text form.  The Legendre check compares the closed-form sum with the
    last entry of the computed pyramid row.
    """
    if N < 2:
        raise PreconditionError("N must be at least 2")
    if legendre_max is None:
        legendre_max = N
    report = []
    h = hermite_h(N)

    def add(identity, n, lhs, rhs):
        report.append(
            {"identity": identity, "n": n, "lhs": str(lhs), "rhs": str(rhs), "status": "pass" if lhs == rhs else "fail"}
        )

    for n in range(N + 1):
        fib, luc = fib_lucas(n + 1)[0], fib_lucas(n)[1]
        t = outer_diagonal(family_poly("chebyshev_t", n), n)
        add("chebyshev_t: 2 n! a_nn = L_n", n, t * (2 * math.factorial(n)), luc)
        u = outer_diagonal(family_poly("chebyshev_u", n), n)
        add("chebyshev_u: n! a_nn = F_(n+1)", n, u * math.factorial(n), fib)
        he = outer_diagonal(family_poly("hermite", n), n)
        add("hermite: 2^n n! a_nn = h_n", n, he * (2**n * math.factorial(n)), h[n])
        if n <= legendre_max:
            le = classical_pyramid("legendre", n)[n]
            add("legendre: closed-form a_nn", n, le, legendre_outer_closed_form(n))
    return report


# -- generating functions ------------------------------------------------------------------


def egf_checks(order: int) -> list[dict]:
    """Truncated-series checks of two generating functions.

    (a) ``sum (2t)^n/n! P_n(z) = exp(2z arctan t) / sqrt(1 + t^2)`` for the
        Weyl polynomials, compared coefficient by coefficient as ZPolys;
    (b) ``sum a_nn t^n = exp(t/2 + t^2/4)`` for the Hermite outer diagonal.
    """
    if order < 2:
        raise PreconditionError("order must be at least 2")
    report = []
    two_z = ZPoly((0, 2))
    atan = TruncSeries.arctan_series(order)
    closed = (atan * two_z).exp() * TruncSeries([1, 0, 1], order).sqrt_reciprocal()
    lhs = TruncSeries.from_terms(
        lambda n: ordering_poly("weyl", n) * Fraction(2**n, math.factorial(n)), order
    )
    for n in range(order + 1):
        a, b = ZPoly._coerce(lhs[n]), ZPoly._coerce(closed[n])
        report.append(
            {"identity": "weyl egf", "n": n, "lhs": str(a), "rhs": str(b), "status": "pass" if a == b else "fail"}
        )
    herm = TruncSeries([0, Fraction(1, 2), Fraction(1, 4)], order).exp()
    for n in range(order + 1):
        a = outer_diagonal(family_poly("hermite", n), n)
        b = herm[n]
        report.append(
            {"identity": "hermite outer egf", "n": n, "lhs": str(a), "rhs": str(b), "status": "pass" if a == b else "fail"}
        )
    return report


def integerized_rows(tag: str, n_max: int) -> list[list[int]]:
    return [integerize(classical_pyramid(tag, n)) for n in range(n_max + 1)]
