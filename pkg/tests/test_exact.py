from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pyramids.exact import (
    HALF,
    I,
    ONE,
    GaussRat,
    SeriesError,
    TruncSeries,
    ZPoly,
    format_gauss,
    lagrange_interpolate,
    parse_gauss,
)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=40)
gauss = st.builds(GaussRat, fracs, fracs)


class TestGaussRat:
    def test_norm_example(self):
        w = GaussRat(HALF.re, HALF.re)
        assert w * w.conj() == GaussRat(Fraction(1, 2))

    def test_conj(self):
        assert GaussRat(Fraction(1, 4), Fraction(3, 4)).conj() == parse_gauss("1/4-3/4 i")

    def test_i_to_the_fourth(self):
        assert I**4 == ONE
        assert I**-1 == -I

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / GaussRat(0)

    def test_parts_are_independent_rationals(self):
        g = GaussRat(Fraction(1, 3), Fraction(1, 5))
        assert g.re.denominator == 3 and g.im.denominator == 5

    @given(gauss, gauss, gauss)
    def test_field_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if b:
            assert (a / b) * b == a

    @given(gauss)
    def test_hash_matches_eq(self, a):
        assert hash(a) == hash(GaussRat(a.re, a.im))
        if a.is_real():
            assert a == a.re


class TestText:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("-3/4", GaussRat(Fraction(-3, 4))),
            ("1/2 i", GaussRat(0, Fraction(1, 2))),
            ("1/4-3/4 i", GaussRat(Fraction(1, 4), Fraction(-3, 4))),
            ("5", GaussRat(5)),
            ("i", I),
            ("-i", -I),
        ],
    )
    def test_parse(self, text, value):
        assert parse_gauss(text) == value

    @pytest.mark.parametrize("text", ["-3/4", "1/2 i", "1/4-3/4 i", "7", "0", "-1 i"])
    def test_canonical_round_trip(self, text):
        assert format_gauss(parse_gauss(text)) == text

    @pytest.mark.parametrize("bad", ["", "1/0", "1//2", "x", "1 + + i", "i i"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_gauss(bad)

    @given(gauss)
    def test_round_trip_property(self, g):
        text = format_gauss(g)
        assert parse_gauss(text) == g
        assert format_gauss(parse_gauss(text)) == text


class TestZPoly:
    def test_evaluate_weyl_p2(self):
        P2 = ZPoly((Fraction(-1, 4), 0, 1))
        assert P2(I * HALF) == GaussRat(Fraction(-1, 2))

    def test_difference_of_squares(self):
        z = ZPoly.z()
        assert (z + I * HALF) * (z - I * HALF) == ZPoly((Fraction(1, 4), 0, 1))

    def test_evaluate_node(self):
        assert ZPoly.z()(I * HALF) == I * HALF

    def test_trimming_and_degree(self):
        assert ZPoly((1, 0, 0)).degree == 0
        assert ZPoly(()).degree == -1
        assert ZPoly((0, 0)).is_zero()

    def test_exact_div(self):
        a = ZPoly((1, 2, 1))
        assert a.exact_div(ZPoly((1, 1))) == ZPoly((1, 1))
        with pytest.raises(ArithmeticError):
            a.exact_div(ZPoly((2, 1)))

    def test_parity(self):
        assert ZPoly((Fraction(-1, 4), 0, 1)).parity() == 0
        assert ZPoly((0, 1, 0, 1)).parity() == 1
        assert ZPoly((1, 1)).parity() is None

    def test_text(self):
        assert ZPoly((Fraction(-3, 4), 2 * I, 1)).to_text() == "z^2 + (2 i) z - 3/4"

    @given(st.lists(gauss, max_size=5), st.lists(gauss, max_size=5), gauss)
    def test_evaluation_is_a_ring_map(self, a, b, w):
        A, B = ZPoly(a), ZPoly(b)
        assert (A * B)(w) == A(w) * B(w)
        assert (A + B)(w) == A(w) + B(w)

    @given(st.lists(gauss, max_size=5), st.lists(gauss, min_size=1, max_size=4))
    def test_divmod(self, a, b):
        A, B = ZPoly(a), ZPoly(b)
        if B.is_zero():
            return
        q, r = A.divmod(B)
        assert q * B + r == A
        assert r.degree < B.degree


class TestSeries:
    def test_exp(self):
        e = TruncSeries.variable(3).exp()
        assert [e[k] for k in range(4)] == [1, 1, Fraction(1, 2), Fraction(1, 6)]

    def test_reciprocal(self):
        r = (1 - TruncSeries.variable(3)).reciprocal()
        assert [r[k] for k in range(4)] == [1, 1, 1, 1]

    def test_arctan(self):
        a = TruncSeries.arctan_series(3)
        assert [a[k] for k in range(4)] == [0, 1, 0, Fraction(-1, 3)]

    def test_order_is_fixed(self):
        with pytest.raises(SeriesError):
            TruncSeries.variable(3) + TruncSeries.variable(4)

    def test_exp_needs_zero_constant(self):
        with pytest.raises(SeriesError):
            TruncSeries.constant(1, 3).exp()

    def test_sqrt_reciprocal_squares_back(self):
        s = TruncSeries([1, 0, 1], 8).sqrt_reciprocal()
        prod = s * s * TruncSeries([1, 0, 1], 8)
        assert [prod[k] for k in range(9)] == [1] + [0] * 8

    def test_exp_of_sum_is_product(self):
        x = TruncSeries.variable(6)
        a, b = x * 2, x * x * Fraction(1, 3)
        lhs = (a + b).exp()
        rhs = a.exp() * b.exp()
        assert all(lhs[k] == rhs[k] for k in range(7))


class TestInterpolation:
    def test_identity_data(self):
        nodes = [I * HALF, I * Fraction(3, 2)]
        assert lagrange_interpolate(nodes, nodes) == ZPoly.z()

    def test_q2p2_values(self):
        nodes = [I * (m + HALF) for m in range(3)]
        P = lagrange_interpolate(nodes, [-2, -6, -12])
        assert P == ZPoly((Fraction(-3, 4), 2 * I, 1))

    def test_single_node(self):
        assert lagrange_interpolate([GaussRat(0)], [5]) == ZPoly((5,))

    def test_duplicate_nodes(self):
        with pytest.raises(ValueError):
            lagrange_interpolate([ONE, ONE], [1, 2])
