"""Orthogonality screening for polynomial families.

The two determinant conditions are necessary for a monic family with the
parity of ``n`` to be orthogonal for some positive weight; the
three-term-recurrence screen is the stronger Favard-style test.  Exact
inner products use a moment sequence in place of an integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .comb import euler_numbers
from .exact import ZERO, GaussRat, ZPoly
from .families import OrderingFamily, ordering_poly
from .transforms import PreconditionError

__all__ = [
    "MomentSeq",
    "sech_moments",
    "condition1",
    "condition2",
    "ScreenResult",
    "three_term_screen",
    "moment_inner_product",
    "gram_schmidt",
    "binom_power_scan",
    "validate_sech_moments",
    "PRINTED_WEYL",
]

Family = Sequence[ZPoly] | Mapping[int, ZPoly] | Callable[[int], ZPoly]


def _get(family: Family, n: int) -> ZPoly:
    if callable(family):
        return family(n)
    return family[n]


def _coeffs(family: Family, degrees: Sequence[int]) -> dict[int, ZPoly]:
    out = {}
    for n in degrees:
        P = _get(family, n)
        if P.degree != n or not P.is_monic():
            raise PreconditionError(f"P_{n} must be monic of degree {n}")
        if P.parity() != n % 2:
            raise PreconditionError(f"P_{n} must have the parity of {n}")
        out[n] = P
    return out


def condition1(family: Family) -> GaussRat:
    """``c40 + c20 c31 - c20 c42`` (zero for orthogonal families)."""
    P = _coeffs(family, (2, 3, 4))
    c20, c31, c40, c42 = P[2][0], P[3][1], P[4][0], P[4][2]
    return c40 + c20 * c31 - c20 * c42


def condition2(family: Family) -> GaussRat:
    """``c20 c51 + c40 c53 - c20 c42 c53 + c60 - c20 c62 - c40 c64 + c20 c42 c64``."""
    P = _coeffs(family, (2, 3, 4, 5, 6))
    c20, c42, c40 = P[2][0], P[4][2], P[4][0]
    c51, c53 = P[5][1], P[5][3]
    c60, c62, c64 = P[6][0], P[6][2], P[6][4]
    return (
        c20 * c51 + c40 * c53 - c20 * c42 * c53 + c60 - c20 * c62 - c40 * c64 + c20 * c42 * c64
    )


@dataclass
class ScreenResult:
    passed: bool
    betas: list[GaussRat]
    failing_n: int | None = None
    remainder: ZPoly | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "betas": [str(b) for b in self.betas],
            "failing_n": self.failing_n,
            "remainder": None if self.remainder is None else str(self.remainder),
            "reason": self.reason,
        }


def three_term_screen(family: Family, N: int) -> ScreenResult:
    """Try ``z P_n = P_(n+1) + beta_n P_(n-1)`` (no ``alpha_n`` term, by parity)
    for n < N, requiring every ``beta_n > 0``.

    On failure, ``failing_n`` is the first n where the remainder
    ``z P_n - P_(n+1) - beta_n P_(n-1)`` is nonzero or ``beta_n`` is not
    positive.
    """
    P = _coeffs(family, range(N + 1))
    z = ZPoly((0, 1))
    betas: list[GaussRat] = []
    r0 = z * P[0] - P[1]
    if not r0.is_zero():
        return ScreenResult(False, betas, 0, r0, "z P_0 != P_1")
    for n in range(1, N):
        r = z * P[n] - P[n + 1]
        beta = r[n - 1]  # P_(n-1) is monic
        rem = r - P[n - 1] * beta
        if not rem.is_zero():
            return ScreenResult(False, betas, n, rem, "nonzero remainder")
        if not (beta.is_real() and beta.re > 0):
            return ScreenResult(False, betas + [beta], n, rem, "beta not positive")
        betas.append(beta)
    return ScreenResult(True, betas)


# -- moment functionals --------------------------------------------------------------


@dataclass(frozen=True)
class MomentSeq:
    moments: tuple[Fraction, ...]

    def __post_init__(self):
        ms = tuple(Fraction(m) for m in self.moments)
        if not ms or ms[0] <= 0:
            raise PreconditionError("mu_0 must be positive")
        object.__setattr__(self, "moments", ms)

    def __len__(self):
        return len(self.moments)

    def __getitem__(self, k: int) -> Fraction:
        return self.moments[k]


def sech_moments(max_degree: int) -> MomentSeq:
    """Moments of ``sech(pi z)``: ``mu_2k = |E_2k| / 4^k``, odd moments zero."""
    E = euler_numbers(max_degree)
    return MomentSeq(tuple(Fraction(abs(E[a]), 2**a) if a % 2 == 0 else Fraction(0) for a in range(max_degree + 1)))


def moment_inner_product(P: ZPoly, Q: ZPoly, mu: MomentSeq) -> GaussRat:
    """``sum_{a,b} p_a q_b mu_(a+b)`` (bilinear, no conjugation)."""
    need = P.degree + Q.degree
    if need >= len(mu):
        raise PreconditionError(f"need moments up to degree {need}, have {len(mu) - 1}")
    acc = ZERO
    for a, pa in enumerate(P.coeffs):
        if not pa:
            continue
        for b, qb in enumerate(Q.coeffs):
            m = mu[a + b]
            if qb and m:
                acc = acc + pa * qb * m
    return acc


def gram_schmidt(mu: MomentSeq, depth: int) -> list[ZPoly]:
    """Monic orthogonal polynomials P_0..P_depth for the moment functional."""
    polys: list[ZPoly] = []
    norms: list[GaussRat] = []
    for n in range(depth + 1):
        P = ZPoly.monomial(n)
        for Pm, hm in zip(polys, norms):
            P = P - Pm * (moment_inner_product(ZPoly.monomial(n), Pm, mu) / hm)
        h = moment_inner_product(P, P, mu)
        if not h:
            raise PreconditionError("moment functional is degenerate")
        polys.append(P)
        norms.append(h)
    return polys


# printed Weyl polynomials P_2 and P_4, used to validate the sech moments
PRINTED_WEYL = {
    0: ZPoly((1,)),
    2: ZPoly((Fraction(-1, 4), 0, 1)),
    4: ZPoly((Fraction(9, 16), 0, Fraction(-7, 2), 0, 1)),
}


def validate_sech_moments() -> dict:
    """The forced vanishings <P0, P2> = <P0, P4> = 0 on the printed Weyl polynomials."""
    mu = sech_moments(8)
    v02 = moment_inner_product(PRINTED_WEYL[0], PRINTED_WEYL[2], mu)
    v04 = moment_inner_product(PRINTED_WEYL[0], PRINTED_WEYL[4], mu)
    return {"<P0,P2>": str(v02), "<P0,P4>": str(v04), "valid": not v02 and not v04}


# -- binomial-power scan ---------------------------------------------------------------------


def binom_power_scan(r_max: int, depth: int = 6) -> list[dict]:
    """For rows proportional to C(n,k)^r, r = 1..r_max, evaluate condition1
    (and condition2 when depth >= 6).  A power passes when every evaluated
    condition vanishes."""
    if r_max < 1 or depth < 4:
        raise PreconditionError("need r_max >= 1 and depth >= 4")
    report = []
    for r in range(1, r_max + 1):
        fam = OrderingFamily("binom_power", r)
        polys = {n: ordering_poly(fam, n) for n in range(2, depth + 1)}
        c1 = condition1(polys)
        entry = {"r": r, "condition1": str(c1)}
        ok = not c1
        if depth >= 6:
            c2 = condition2(polys)
            entry["condition2"] = str(c2)
            ok = ok and not c2
        entry["status"] = "pass" if ok else "fail"
        report.append(entry)
    return report
