"""Terminating hypergeometric sums, evaluated exactly, and the identity suite
linking the Weyl and binomial-squared orderings to continuous Hahn and
Bateman polynomials.

Upper parameters may be polynomials in ``z`` (ZPoly), which makes the
result a ZPoly; lower parameters must be scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .comb import binomial, rising_factorial
from .exact import I, ONE, ZERO, GaussRat, ZPoly, as_gauss
from .families import ordering_poly
from .transforms import PreconditionError, i_pow

__all__ = [
    "HypSpec",
    "pfq",
    "termination_index",
    "scaled_2f1",
    "continuous_hahn",
    "bateman_f",
    "identity_suite",
    "bridge_checks",
    "c_nm",
]


def _as_param(x):
    if isinstance(x, ZPoly):
        return x
    return as_gauss(x)


def _nonpositive_int(x) -> int | None:
    """-x when x is a nonpositive integer scalar, else None."""
    if isinstance(x, ZPoly):
        if x.degree > 0:
            return None
        x = x[0]
    x = as_gauss(x)
    if x.im or x.re.denominator != 1 or x.re > 0:
        return None
    return int(-x.re)


@dataclass(frozen=True)
class HypSpec:
    """``pFq(upper; lower; argument)`` with at least one upper parameter a
    nonpositive integer, so the series terminates."""

    upper: tuple
    lower: tuple
    argument: object = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(_as_param(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_gauss(b) for b in self.lower))
        object.__setattr__(self, "argument", as_gauss(self.argument))
        K = termination_index(self.upper)
        for b in self.lower:
            j = _nonpositive_int(b)
            if j is not None and j < K:
                raise PreconditionError(f"lower parameter {b} vanishes in term {j + 1} <= {K}")


def termination_index(upper: Sequence) -> int:
    ks = [k for k in (_nonpositive_int(a) for a in upper) if k is not None]
    if not ks:
        raise PreconditionError("no upper parameter is a nonpositive integer; series does not terminate")
    return min(ks)


def pfq(spec: HypSpec | None = None, *, upper=None, lower=None, argument=1):
    """``sum_{k<=K} prod (a)_k / prod (b)_k * x^k / k!``, exactly.

    >>> pfq(upper=(-1, 2, 1), lower=(1, 1))
    GaussRat('-1')
    """
    if spec is None:
        spec = HypSpec(tuple(upper), tuple(lower), argument)
    K = termination_index(spec.upper)
    x = spec.argument
    total = ZERO
    term = ONE
    for k in range(K + 1):
        total = term + total
        if k == K:
            break
        num = ONE
        for a in spec.upper:
            num = (a + k) * num
        den = ONE
        for b in spec.lower:
            den = den * (b + k)
        term = term * num * (x / (den * (k + 1)))
    return total


def scaled_2f1(n: int, b, c, x) -> GaussRat:
    """``(c)_n * 2F1(-n, b; c; x)`` via ``(c)_n/(c)_k = (c+k)_(n-k)``.

    The left form is undefined when ``c`` is a nonpositive integer > -n;
    this right form is its polynomial continuation in ``c`` and is always
    finite.
    """
    b, c, x = as_gauss(b), as_gauss(c), as_gauss(x)
    total = ZERO
    for k in range(n + 1):
        t = rising_factorial(GaussRat(-n), k) * rising_factorial(b, k) * (x**k) / math.factorial(k)
        total = total + t * rising_factorial(c + k, n - k)
    return total


def continuous_hahn(n: int, z, a, b, c, d):
    """``p_n(z; a,b,c,d) = i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+iz; a+c, a+d; 1)``.

    ``z`` may be a scalar or a ZPoly.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    a, b, c, d = (as_gauss(v) for v in (a, b, c, d))
    z = _as_param(z)
    s = pfq(upper=(-n, n + a + b + c + d - 1, z * I + a), lower=(a + c, a + d))
    pref = i_pow(n) * rising_factorial(a + c, n) * rising_factorial(a + d, n) / math.factorial(n)
    return s * pref


def bateman_f(n: int, z):
    """``F_n(z) = 3F2(-n, n+1, (1+z)/2; 1, 1; 1)``."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    z = _as_param(z)
    return pfq(upper=(-n, n + 1, (z + 1) * Fraction(1, 2)), lower=(1, 1))


def c_nm(n: int, m: int) -> tuple[int, int]:
    """The two expressions of c(n, m):
    ``sum_k C(m+k, m) C(m, n-k)`` and ``sum_k C(n+k, m) C(m, k)``."""
    first = sum(binomial(m + k, m) * binomial(m, n - k) for k in range(n + 1))
    second = sum(binomial(n + k, m) * binomial(m, k) for k in range(m + 1))
    return first, second


# -- identity suite -------------------------------------------------------------------


def _hahn_lhs(n: int, m: int) -> GaussRat:
    # (m-n+1)_n / n! * 2F1(-n, m+1; m-n+1; -1)
    return scaled_2f1(n, m + 1, m - n + 1, -1) / math.factorial(n)


def _hahn_rhs(n: int, m: int) -> GaussRat:
    # (-1)^n 3F2(-n, n+1, (m+1)/2; 1/2, 1; 1)
    return pfq(upper=(-n, n + 1, Fraction(m + 1, 2)), lower=(Fraction(1, 2), 1)) * (-1) ** n


def _bateman_lhs(n: int, m: int) -> int:
    return sum((-1) ** k * binomial(n + k, k) * binomial(m + k, k) * binomial(n, k) for k in range(n + 1))


def _bateman_rhs(n: int, m: int) -> int:
    return (-1) ** n * sum(binomial(n, k) ** 2 * binomial(m + k, n) for k in range(n + 1))


def _wz1(u, n: int, m: int):
    return (n + 2) * u(n + 2, m) - (2 * m + 1) * u(n + 1, m) - (n + 1) * u(n, m)


def _wz_bateman(u, n: int, m: int):
    return (n + 2) ** 2 * u(n + 2, m) + (2 * m + 1) * (2 * n + 3) * u(n + 1, m) - (n + 1) ** 2 * u(n, m)


def _prudnikov(n: int, m: int) -> tuple[GaussRat, GaussRat]:
    a = GaussRat(n + 1)
    b = GaussRat(Fraction(m + 1, 2))
    lhs = pfq(upper=(-n, a, b), lower=((a - n) * Fraction(1, 2), (a - n + 1) * Fraction(1, 2)))
    rhs = scaled_2f1(n, 2 * b, 2 * b - a + 1, -1) / rising_factorial(1 - a, n)
    return lhs, rhs


def identity_suite(n_max: int, m_max: int) -> list[dict]:
    """Exact check of the hypergeometric identities on ``0 <= n <= n_max``,
    ``0 <= m <= m_max``.  Returns one ``{identity, n, m, status}`` entry per
    cell and identity; failures carry both sides.

    Identities:
      ``iden-hyper-1a``  sum_k C(n,k)(m+1-k)_n = (m-n+1)_n 2F1(-n, m+1; m-n+1; -1)
      ``form-hyp1``      (m-n+1)_n/n! 2F1(...) = (-1)^n 3F2(-n, n+1, (m+1)/2; 1/2, 1; 1)
      ``wz-1:lhs|rhs``   (n+2)u(n+2) - (2m+1)u(n+1) - (n+1)u(n) = 0 for both sides
      ``c-nm``           both forms of c(n,m) equal the left side of form-hyp1
      ``bateman-lemma``  sum (-1)^k C(n+k,k)C(m+k,k)C(n,k) = (-1)^n sum C(n,k)^2 C(m+k,n)
      ``wz-bateman:lhs|rhs``  its second-order recurrence, both sides
      ``prudnikov``      the 3F2 -> 2F1 entry at a = n+1, b = (m+1)/2

    Products ``(c)_n 2F1(...; c; ...)`` with ``c`` a nonpositive integer are
    evaluated in the cancelled form of :func:`scaled_2f1`.
    """
    if n_max < 1 or m_max < 1:
        raise PreconditionError("n_max and m_max must be at least 1")
    report: list[dict] = []

    def add(identity, n, m, lhs, rhs):
        entry = {"identity": identity, "n": n, "m": m, "status": "pass" if lhs == rhs else "fail"}
        if lhs != rhs:
            entry["lhs"] = str(lhs)
            entry["rhs"] = str(rhs)
        report.append(entry)

    cache_l: dict = {}
    cache_r: dict = {}

    def hl(n, m):
        if (n, m) not in cache_l:
            cache_l[(n, m)] = _hahn_lhs(n, m)
        return cache_l[(n, m)]

    def hr(n, m):
        if (n, m) not in cache_r:
            cache_r[(n, m)] = _hahn_rhs(n, m)
        return cache_r[(n, m)]

    for n in range(n_max + 1):
        for m in range(m_max + 1):
            direct = sum((binomial(n, k) * rising_factorial(m + 1 - k, n) for k in range(n + 1)), 0)
            add("iden-hyper-1a", n, m, GaussRat(direct), scaled_2f1(n, m + 1, m - n + 1, -1))
            add("form-hyp1", n, m, hl(n, m), hr(n, m))
            add("wz-1:lhs", n, m, _wz1(hl, n, m), ZERO)
            add("wz-1:rhs", n, m, _wz1(hr, n, m), ZERO)
            c1, c2 = c_nm(n, m)
            add("c-nm", n, m, (GaussRat(c1), GaussRat(c2)), (hl(n, m), hl(n, m)))
            add("bateman-lemma", n, m, _bateman_lhs(n, m), _bateman_rhs(n, m))
            add("wz-bateman:lhs", n, m, _wz_bateman(_bateman_lhs, n, m), 0)
            add("wz-bateman:rhs", n, m, _wz_bateman(_bateman_rhs, n, m), 0)
            add("prudnikov", n, m, *_prudnikov(n, m))
    return report


# -- polynomial bridges -------------------------------------------------------------------


def _weyl_hyper(n: int) -> ZPoly:
    # n!/(2i)^n 3F2(-n, n+1, 1/4 - iz/2; 1/2, 1; 1)
    param = ZPoly((Fraction(1, 4), -I * Fraction(1, 2)))
    s = pfq(upper=(-n, n + 1, param), lower=(Fraction(1, 2), 1))
    return ZPoly._coerce(s) * (as_gauss(math.factorial(n)) / (GaussRat(0, 2) ** n))


def _hahn_form(n: int) -> ZPoly:
    # (-1)^n 2^n / C(2n, n) * p_n(-z/2; 1/4, 3/4, 1/4, 3/4)
    q, t = Fraction(1, 4), Fraction(3, 4)
    p = continuous_hahn(n, ZPoly((0, Fraction(-1, 2))), q, t, q, t)
    return ZPoly._coerce(p) * Fraction((-1) ** n * 2**n, binomial(2 * n, n))


def _bateman_form(n: int) -> ZPoly:
    # (-i)^n (n!)^3/(2n)! F_n(-2iz)
    f = bateman_f(n, ZPoly((0, GaussRat(0, -2))))
    return ZPoly._coerce(f) * (i_pow(3 * n) * Fraction(math.factorial(n) ** 3, math.factorial(2 * n)))


def _sample_points(n: int) -> list[Fraction]:
    return [Fraction(j, 3) - 1 for j in range(n + 1)]


def bridge_checks(n_max_weyl: int = 12, n_max_bateman: int = 10) -> list[dict]:
    """Polynomial identities between the ordering polynomials and their
    hypergeometric forms, checked by coefficient comparison and at
    ``n + 1`` rational points."""
    report = []

    def add(identity, n, lhs: ZPoly, rhs: ZPoly):
        coeff_ok = lhs == rhs
        points_ok = all(lhs(x) == rhs(x) for x in _sample_points(n))
        entry = {"identity": identity, "n": n, "status": "pass" if coeff_ok and points_ok else "fail"}
        if entry["status"] == "fail":
            entry["lhs"] = str(lhs)
            entry["rhs"] = str(rhs)
        report.append(entry)

    for n in range(n_max_weyl + 1):
        weyl = ordering_poly("weyl", n)
        add("weyl = 3F2 form", n, weyl, _weyl_hyper(n))
        add("weyl = continuous Hahn", n, weyl, _hahn_form(n))
    for n in range(n_max_bateman + 1):
        add("binom_power(2) = Bateman", n, ordering_poly("binom_power_2", n), _bateman_form(n))
    return report
