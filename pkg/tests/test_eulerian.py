import math
from fractions import Fraction

import pytest

from pyramids.comb import eulerian_a_row
from pyramids.eulerian import (
    NOT_REPRODUCIBLE,
    b_explicit,
    b_explicit_printed,
    b_gf_check,
    b_row,
    descent_counts_a,
    descent_counts_b,
    euler_sum_check,
    monomial_pyramid,
    type_ab_relations,
)
from pyramids.exact import ZPoly
from pyramids.transforms import poly_to_pyramid

F = Fraction


def test_monomial_pyramid_examples():
    assert list(monomial_pyramid(1)) == [F(1, 2), F(1, 2)]
    assert list(monomial_pyramid(2)) == [F(1, 8), F(6, 8), F(1, 8)]
    assert list(monomial_pyramid(3)) == [F(1, 48), F(23, 48), F(23, 48), F(1, 48)]


@pytest.mark.parametrize("n", range(13))
def test_rows(n):
    assert monomial_pyramid(n) == poly_to_pyramid(ZPoly.monomial(n), n)
    b = b_row(n)
    assert b == b[::-1] and all(x > 0 for x in b)
    assert sum(b) == 2**n * math.factorial(n)


def test_b_row_examples():
    assert b_row(0) == [1]
    assert b_row(2) == [1, 6, 1]
    assert b_row(3) == [1, 23, 23, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_descent_counts(n):
    assert descent_counts_b(n) == b_row(n)
    assert descent_counts_a(n) == eulerian_a_row(n)


def test_gf():
    report = b_gf_check(10)
    assert all(e["status"] == "pass" for e in report)


def test_euler_sums():
    report = euler_sum_check(12)
    assert all(e["status"] == "pass" for e in report)
    assert sum((-1) ** k * b for k, b in enumerate(b_row(4))) == 80


def test_explicit_formulas():
    for n in range(11):
        assert [b_explicit(n, k) for k in range(n + 1)] == b_row(n)
    # the displayed version already disagrees at n = 2, k = 0
    assert b_explicit_printed(2, 0) == 3 != b_row(2)[2]


def test_relations_report():
    report = type_ab_relations(10)
    statuses = {}
    for e in report:
        statuses.setdefault(e["identity"], set()).add(e["status"])
    assert statuses["B_n(x) = (1-x)^(n+1) sum (2k+1)^n x^k"] == {"pass"}
    assert statuses["A_n(x) = (1-x)^(n+1) sum (k+1)^n x^k"] == {"pass"}
    assert statuses["explicit B_{n,k} (corrected)"] == {"pass"}
    assert statuses["B_2n = (1-x)^n A_n (as printed)"] == {NOT_REPRODUCIBLE}
    witness = next(e for e in report if e["identity"].startswith("B_2n =") and e["n"] == 2)
    assert witness["lhs"] == "x^2 + 6 x + 1"
    assert not any(e["status"] == "fail" for e in report)


def test_series_example():
    # (1 + 6x + x^2)/(1 - x)^3 = 1 + 9x + 25x^2 + ...
    inv = ZPoly((1, 6, 1))
    series = [(2 * k + 1) ** 2 for k in range(4)]
    assert series[:3] == [1, 9, 25]
    prod = ZPoly(series) * ZPoly((1, -1)) ** 3
    assert [prod[k] for k in range(4)] == [inv[k] for k in range(4)]
