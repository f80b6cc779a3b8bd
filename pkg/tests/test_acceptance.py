"""Acceptance criteria, one check per criterion.

Under pytest each criterion is its own test and prints one PASS/FAIL line;
the lines are repeated in an "acceptance" section of the terminal summary.
Run the file directly (``python3 tests/test_acceptance.py [--seed N]``) to
print just the eleven lines.

Expected values come from printed tables or from independent computations;
where a printed value cannot be reproduced the criterion fails and the
detail names the mismatch.
"""

from __future__ import annotations

import math
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import ACCEPTANCE_KEY, rand_balanced_word, rand_frac, rand_gauss, rand_poly  # noqa: E402
from pyramids.eulerian import b_gf_check, euler_sum_check  # noqa: E402
from pyramids.exact import ONE, ZERO, GaussRat, ZPoly  # noqa: E402
from pyramids.families import (  # noqa: E402
    OrderingFamily,
    egf_checks,
    integerized_rows,
    ordering_poly,
    outer_diagonal_identities,
)
from pyramids.hyperg import bridge_checks, identity_suite  # noqa: E402
from pyramids.ortho import (  # noqa: E402
    binom_power_scan,
    condition1,
    condition2,
    moment_inner_product,
    sech_moments,
    three_term_screen,
    validate_sech_moments,
)
from pyramids.transforms import (  # noqa: E402
    PyramidRow,
    basis_det,
    hankel_inverse,
    hankel_matrix,
    i_pow,
    poly_to_pyramid,
    pyramid_to_poly,
    q_basis,
)
from pyramids.weyl import WeylExpr, reduce_balanced, reduce_via_interpolation  # noqa: E402

F = Fraction
DEFAULT_SEED = 20240611

PRINTED_TABLES = {
    "symmetric": [(1,), (0, 1), (F(-3, 4), 0, 1), (0, F(-23, 4), 0, 1), (F(105, 16), 0, F(-43, 4), 0, 1)],
    "born_jordan": [(1,), (0, 1), (F(-5, 12), 0, 1), (0, F(-11, 4), 0, 1), (F(189, 80), 0, F(-19, 2), 0, 1)],
    "weyl": [(1,), (0, 1), (F(-1, 4), 0, 1), (0, F(-5, 4), 0, 1), (F(9, 16), 0, F(-7, 2), 0, 1)],
}
PRINTED_LEGENDRE = [
    [1], [1, 1], [7, 10, 7], [17, 103, 103, 17], [203, 2948, 7138, 2948, 203],
    [583, 20091, 100286, 100286, 20091, 583],
]
PRINTED_HERMITE = [
    [1], [1, 1], [3, 2, 3], [7, 17, 17, 7], [25, 76, 182, 76, 25], [27, 159, 454, 454, 159, 27],
]


def _failures(report):
    return [e for e in report if e["status"] != "pass"]


def c1_polynomial_tables(seed):
    bad = []
    for name, table in PRINTED_TABLES.items():
        for n, coeffs in enumerate(table):
            got, want = ordering_poly(name, n), ZPoly(coeffs)
            if got != want:
                bad.append(f"{name} P{n}: computed {got}, printed {want}")
    return not bad, "; ".join(bad) or "15 polynomials match"


def c2_printed_pyramids(seed):
    bad = []
    for tag, printed in (("legendre", PRINTED_LEGENDRE), ("hermite", PRINTED_HERMITE)):
        got = integerized_rows(tag, 5)
        bad += [f"{tag} row {n}: {g} vs {p}" for n, (g, p) in enumerate(zip(got, printed)) if g != p]
    return not bad, "; ".join(bad) or "Legendre and Hermite rows 0-5 match"


def c3_oracle_equivalence(seed):
    bad = []
    for n in range(9):
        for k in range(n + 1):
            w = WeylExpr.word("q" * k + "p" * n + "q" * (n - k))
            a, b = reduce_balanced(w), reduce_via_interpolation(w)
            c = q_basis(n, k) * (i_pow(n) * math.factorial(n))
            if not a == b == c:
                bad.append(f"q^{k} p^{n} q^{n - k}")
    rng = random.Random(seed)
    for _ in range(100):
        w = WeylExpr.word(rand_balanced_word(rng, 12))
        if reduce_balanced(w) != reduce_via_interpolation(w):
            bad.append(str(w))
    return not bad, f"mismatches: {bad}" if bad else "45 basis words and 100 random words agree"


def c4_round_trip(seed):
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        n = rng.randint(0, 10)
        row = PyramidRow.of([rand_gauss(rng) for _ in range(n + 1)])
        P = rand_poly(rng, n)
        if poly_to_pyramid(pyramid_to_poly(row), n) != row or pyramid_to_poly(poly_to_pyramid(P, n)) != P:
            bad += 1
    return bad == 0, f"{bad} of 200 round trips failed" if bad else "200 rows and 200 polynomials round-trip"


def c5_screening(seed):
    def fam(name):
        f = OrderingFamily.parse(name)
        return {n: ordering_poly(f, n) for n in range(7)}

    bad = []
    for name in ("weyl", "binom_power_2"):
        P = fam(name)
        if condition1(P) or condition2(P):
            bad.append(f"{name} conditions nonzero")
    for name, printed in (("symmetric", F(45, 16)), ("born_jordan", F(-9, 20))):
        c1 = condition1(fam(name))
        if c1 != printed:
            bad.append(f"{name} condition1 = {c1}, printed {printed}")
    passing = [e["r"] for e in binom_power_scan(200, 6) if e["status"] == "pass"]
    if passing != [1, 2]:
        bad.append(f"scan passes {passing}")
    return not bad, "; ".join(bad) or "all screening values reproduced"


def c6_weyl_orthogonality(seed):
    if not validate_sech_moments()["valid"]:
        return False, "sech moments fail the forced vanishings"
    mu = sech_moments(16)
    P = [ordering_poly("weyl", n) for n in range(10)]  # P_9 closes the recurrence for beta_8
    bad = []
    for n in range(9):
        h = moment_inner_product(P[n], P[n], mu)
        if not (h.is_real() and h.re > 0):
            bad.append(f"<P{n},P{n}> = {h}")
        bad += [f"<P{n},P{m}> != 0" for m in range(n) if moment_inner_product(P[n], P[m], mu)]
    screen = three_term_screen(P, 9)
    if not screen.passed:
        bad.append(f"three-term screen fails at n = {screen.failing_n}")
    betas = ", ".join(str(b) for b in screen.betas)
    return not bad, "; ".join(bad) or f"orthogonal through n = 8, beta = {betas}"


def c7_hypergeometric(seed):
    suite = _failures(identity_suite(20, 20))
    bridges = _failures(bridge_checks(12, 10))
    ok = not suite and not bridges
    return ok, "identity suite and bridges clean" if ok else f"{len(suite)} suite and {len(bridges)} bridge failures"


def c8_outer_diagonals(seed):
    bad = _failures(outer_diagonal_identities(20, legendre_max=10))
    return not bad, f"failures: {bad[:3]}" if bad else "Lucas, Fibonacci, Hermite and Legendre identities hold"


def c9_generating_functions(seed):
    bad = _failures(egf_checks(10)) + _failures(b_gf_check(10)) + _failures(euler_sum_check(12))
    return not bad, f"failures: {bad[:3]}" if bad else "all series coefficients match"


def c10_linear_algebra(seed):
    bad = []
    for n in range(16):
        M, W = hankel_matrix(n), hankel_inverse(n)
        for i in range(n + 1):
            for j in range(n + 1):
                if sum(M[i][k] * W[k][j] for k in range(n + 1)) != int(i == j):
                    bad.append(f"Hankel n={n}")
                    break
    signs = []
    for n in range(1, 9):
        d = basis_det(n)
        if abs(d) != math.prod(k**k for k in range(1, n + 1)):
            bad.append(f"|det S| n={n}")
        signs.append("+" if d > 0 else "-")
    return not bad, "; ".join(bad) or f"Hankel inverse n <= 15; |det S| = prod k^k, signs n=1..8: {''.join(signs)}"


def c11_structure(seed):
    rng = random.Random(seed)
    bad = []
    for _ in range(100):
        n = rng.randint(0, 8)
        entries = [rand_gauss(rng) for _ in range(n + 1)]
        if rng.random() < 0.5:
            entries[-1] = entries[-1] + (ONE - sum(entries, ZERO))
        row = PyramidRow.of(entries)
        P = pyramid_to_poly(row)
        if row.normalized != (P.degree == n and P.leading() == ONE):
            bad.append(f"normalized/monic {row}")
    for _ in range(100):
        n = rng.randint(0, 8)
        entries = [rand_gauss(rng) for _ in range(n + 1)]
        if rng.random() < 0.5:
            for k in range(n // 2 + 1):
                entries[n - k] = entries[k].conj()
            if n % 2 == 0:
                entries[n // 2] = GaussRat(entries[n // 2].re)
        row = PyramidRow.of(entries)
        if row.hermitian_symmetric != pyramid_to_poly(row).is_real():
            bad.append(f"hermitian/real {row}")
    for _ in range(100):
        n = rng.randint(0, 8)
        half = [rand_frac(rng) for _ in range(n // 2 + 1)]
        entries = [half[min(k, n - k)] for k in range(n + 1)]
        P = pyramid_to_poly(PyramidRow.of(entries))
        if not P.is_zero() and P.parity() != n % 2:
            bad.append(f"parity {entries}")
    return not bad, "; ".join(bad[:3]) or "300 random rows satisfy all three statements"


CRITERIA = [
    ("printed polynomial tables", c1_polynomial_tables),
    ("printed Legendre and Hermite pyramids", c2_printed_pyramids),
    ("oracle equivalence of the two reductions", c3_oracle_equivalence),
    ("pyramid/polynomial round trip", c4_round_trip),
    ("screening replication", c5_screening),
    ("exact Weyl orthogonality", c6_weyl_orthogonality),
    ("hypergeometric suite", c7_hypergeometric),
    ("outer diagonals", c8_outer_diagonals),
    ("generating functions", c9_generating_functions),
    ("linear algebra lemmas", c10_linear_algebra),
    ("structure theorems", c11_structure),
]


def line(number: int, seed: int) -> tuple[bool, str]:
    title, check = CRITERIA[number - 1]
    ok, detail = check(seed)
    return ok, f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, seed, request, capsys):
    ok, text = line(number, seed)
    with capsys.disabled():
        print("\n" + text)
    request.config.stash.setdefault(ACCEPTANCE_KEY, {})[number] = text
    assert ok, text



if __name__ == "__main__":
    import argparse

    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    seed = ap.parse_args().seed
    results = [line(k, seed) for k in range(1, len(CRITERIA) + 1)]
    for _, text in results:
        print(text)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
