"""Polynomial gcd and exact division on homogeneous three-variable input."""
import pytest
from hypothesis import given, settings

from syzcurve import AllZero, divides, exact_quotient, gcd_many, parse

from conftest import hpolys


class TestDivides:
    def test_factor_divides_product(self):
        f, g = parse("x + y"), parse("x^2 + y*z")
        assert divides(f, f * g)
        assert divides(g, f * g)

    def test_non_divisor(self):
        assert not divides(parse("x"), parse("y^2"))
        assert not divides(parse("x + y"), parse("x^2 + y^2"))

    @given(hpolys(max_degree=3), hpolys(max_degree=3))
    @settings(max_examples=40)
    def test_product_always_divisible(self, f, g):
        assert divides(f, f * g)


class TestExactQuotient:
    def test_round_trip(self):
        f, g = parse("x^2 - y*z"), parse("x + y + z")
        assert exact_quotient(f * g, g) == f

    def test_inexact_rejected(self):
        with pytest.raises(ArithmeticError):
            exact_quotient(parse("x^2 + y^2"), parse("x + y"))

    @given(hpolys(max_degree=3), hpolys(max_degree=3))
    @settings(max_examples=40)
    def test_quotient_recovers_factor(self, f, g):
        assert exact_quotient(f * g, g) == f


class TestGcdMany:
    def test_coprime(self):
        g = gcd_many([parse("x^2 + y*z"), parse("y^2 + x*z")])
        assert g.degree == 0

    def test_common_factor(self):
        h = parse("x + 2*y - z")
        g = gcd_many([h * parse("x^2"), h * parse("y*z + x^2"),
                      h * parse("z^2 - x*y")])
        assert g.degree == 1
        assert divides(h, g) and divides(g, h)

    def test_single_input(self):
        f = parse("x^2*y")
        g = gcd_many([f])
        assert divides(g, f) and divides(f, g)

    def test_all_zero(self):
        with pytest.raises(AllZero):
            gcd_many([])

    def test_zero_entries_ignored(self):
        from syzcurve import HPoly
        g = gcd_many([HPoly.zero(2), parse("x*y")])
        assert divides(parse("x*y"), g)

    @given(hpolys(max_degree=2), hpolys(max_degree=2), hpolys(max_degree=2))
    @settings(max_examples=30)
    def test_common_factor_detected(self, f, g, h):
        d = gcd_many([f * h, g * h])
        assert divides(h, d)
        assert divides(d, f * h)
        assert divides(d, g * h)
