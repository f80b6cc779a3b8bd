import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pyramids.comb import (
    binomial,
    euler_numbers,
    eulerian_a,
    eulerian_a_row,
    fib_lucas,
    rising_factorial,
    stirling1,
)
from pyramids.exact import HALF, I, ZPoly


def test_binomial_conventions():
    assert binomial(4, 2) == 6
    assert binomial(3, -1) == 0
    assert binomial(2, 3) == 0


def test_stirling_examples():
    assert stirling1(3, 2) == -3
    assert stirling1(3, 1) == 2
    assert all(stirling1(n, n) == 1 for n in range(11))
    assert stirling1(4, 5) == 0 and stirling1(4, -1) == 0


@pytest.mark.parametrize("n", range(9))
def test_stirling_rising_factorial_identity(n):
    # (y)_n = sum_j s(n, j) (y + n - 1)^j as polynomials in y
    y = ZPoly.z()
    rhs = sum((ZPoly((n - 1, 1)) ** j * stirling1(n, j) for j in range(n + 1)), ZPoly())
    assert rising_factorial(y, n) == rhs


def test_rising_factorial_examples():
    assert rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    lin = ZPoly.linear(-I, HALF)
    assert rising_factorial(lin, 1) == lin
    assert rising_factorial(lin, 0) == 1
    assert all(rising_factorial(1, n) == math.factorial(n) for n in range(8))


def test_euler_numbers():
    E = euler_numbers(12)
    assert E[:7] == [1, 0, -1, 0, 5, 0, -61]
    assert E[12] == 2702765
    assert all(e == 0 for e in E[1::2])


def test_fib_lucas():
    assert [fib_lucas(n) for n in range(6)] == [(0, 2), (1, 1), (1, 3), (2, 4), (3, 7), (5, 11)]


@given(st.integers(min_value=2, max_value=60))
def test_fib_lucas_relation(n):
    f, l = fib_lucas(n)
    assert l == fib_lucas(n - 1)[0] + fib_lucas(n + 1)[0]
    assert f == fib_lucas(n - 1)[0] + fib_lucas(n - 2)[0]


def test_eulerian_a():
    assert eulerian_a_row(3) == [1, 4, 1, 0]
    assert eulerian_a_row(4) == [1, 11, 11, 1, 0]
    assert all(sum(eulerian_a_row(n)) == math.factorial(n) for n in range(1, 9))
    assert eulerian_a(0, 0) == 1
