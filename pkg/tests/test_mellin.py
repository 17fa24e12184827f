import math
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from expoly import exact_numbers as en
from expoly import exp_poly as ep
from expoly import mellin as me
from expoly.errors import NonConvergenceError
from expoly.mellin import FormalPowerSeries as FPS
from expoly.polynomial import RationalPolynomial

small_fracs = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@st.composite
def series(draw, max_order=12):
    coeffs = draw(st.lists(small_fracs, min_size=1, max_size=max_order + 1))
    return FPS.from_coeffs(coeffs)


@st.composite
def polys(draw, max_degree=6):
    return RationalPolynomial(draw(st.lists(st.integers(-6, 6), min_size=1,
                                            max_size=max_degree + 1)))


class TestSeriesBookkeeping:
    def test_order_rules(self):
        a = FPS.exp(8)
        b = FPS.exp(5, 2)
        assert (a + b).order == 5
        assert (a * b).order == 5
        assert a.derivative().order == 7
        assert a.shift(3).order == 11

    def test_truncate_cannot_extend(self):
        with pytest.raises(ValueError):
            FPS.exp(4).truncate(6)

    def test_exp_product(self):
        assert FPS.exp(10) * FPS.exp(10) == FPS.exp(10, 2)

    def test_exp_power_coefficients(self):
        e = FPS.exp(9, Fraction(1, 2), 3)
        assert e.coeffs[6] == Fraction(1, 8)
        assert e.coeffs[7] == 0

    def test_derivative_of_order_zero(self):
        with pytest.raises(ValueError):
            FPS.constant(1, 0).derivative()


class TestXD:
    def test_identity(self):
        g = FPS.from_coeffs([1, 2, 3])
        assert me.xD_pow(g, 0) == g

    def test_exp_square(self):
        expected = FPS.from_coeffs([Fraction(k * k, factorial(k)) for k in range(7)])
        assert me.xD_pow(FPS.exp(6), 2) == expected
        assert expected == FPS.from_poly(ep.phi_poly(2), 6) * FPS.exp(6)

    def test_monomial(self):
        assert me.xD_pow(FPS.from_coeffs([0, 0, 0, 1]), 5).coeffs[3] == 243

    def test_stirling_route_first_power(self):
        g = FPS.from_coeffs([3, 1, 4, 1, 5, 9])
        assert me.xD_pow_via_stirling(g, 1) == g.derivative().shift(1).truncate(g.order)

    def test_stirling_route_exp(self):
        e = FPS.exp(10)
        assert me.xD_pow_via_stirling(e, 3) == FPS.from_poly(ep.phi_poly(3), 10) * e

    @settings(max_examples=60, deadline=None)
    @given(series(), st.integers(0, 8))
    def test_routes_agree(self, g, n):
        assert me.xD_pow(g, n) == me.xD_pow_via_stirling(g, n)

    @settings(max_examples=40, deadline=None)
    @given(series(), st.integers(0, 5), st.integers(0, 5))
    def test_composition(self, g, n, m):
        assert me.xD_pow(me.xD_pow(g, n), m) == me.xD_pow(g, n + m)


class TestPolynomialOfXD:
    def test_examples(self):
        g = FPS.from_coeffs([2, -1, 5, 7])
        assert me.apply_poly_of_xD(RationalPolynomial([1]), g) == g
        e = FPS.exp(8)
        sq = me.apply_poly_of_xD(RationalPolynomial([0, 0, 1]), e)
        assert sq.coeffs == tuple(Fraction(k * k, factorial(k)) for k in range(9))
        falling = me.apply_poly_of_xD(RationalPolynomial([0, -1, 1]), g)
        assert falling.coeffs == tuple(c * k * (k - 1) for k, c in enumerate(g.coeffs))

    @settings(max_examples=40, deadline=None)
    @given(polys(), polys(), small_fracs, series())
    def test_linearity(self, f, h, alpha, g):
        lhs = me.apply_poly_of_xD(f * alpha + h, g)
        rhs = me.apply_poly_of_xD(f, g) * alpha + me.apply_poly_of_xD(h, g)
        assert lhs == rhs


class TestDx:
    def test_identity(self):
        g = FPS.from_coeffs([1, 2, 3])
        assert me.Dx_pow(g, 0) == g

    @pytest.mark.parametrize("n", range(0, 7))
    def test_exp(self, n):
        # (Dx)^n e^x = phi_{n+1}(x)/x e^x
        e = FPS.exp(12)
        rhs = FPS.from_poly(ep.phi_poly(n + 1).divide_by_x(), 12) * e
        assert me.Dx_pow(e, n) == rhs

    @settings(max_examples=40, deadline=None)
    @given(polys(8), st.integers(0, 6))
    def test_routes_on_polynomials(self, p, n):
        g = FPS.from_poly(p, 8)
        assert me.Dx_pow(g, n) == me.Dx_pow_via_stirling(g, n)


class TestLeibniz:
    def test_examples(self):
        assert me.leibniz_xD(RationalPolynomial([1, 2]), RationalPolynomial([3]), 0)
        x, x2 = RationalPolynomial.monomial(1), RationalPolynomial.monomial(2)
        assert me.leibniz_xD(x, x2, 3)
        assert me.xD_poly(x * x2, 3) == RationalPolynomial.monomial(3, 27)

    @settings(max_examples=40, deadline=None)
    @given(polys(), polys(), st.integers(0, 6))
    def test_random(self, f, g, n):
        assert me.leibniz_xD(f, g, n)


class TestExpPower:
    @pytest.mark.parametrize("a,p,n,order", [(1, 1, 4, 10), (2, 3, 2, 12), (-1, 2, 4, 16),
                                             (Fraction(1, 3), 2, 5, 14)])
    def test_examples(self, a, p, n, order):
        assert me.xD_exp_power_check(a, p, n, order)

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            me.xD_exp_power_check(1, 3, 4, 10)


class TestSeriesTransform:
    def test_dobinski_case(self):
        lhs, rhs = me.series_transform(RationalPolynomial.monomial(8), 1.0)
        assert lhs == pytest.approx(4140 * math.e, rel=1e-14)
        assert rhs == pytest.approx(4140 * math.e, rel=1e-14)

    @pytest.mark.parametrize("x", [-3.0, 0.0, 2.0, 7.5])
    def test_constant(self, x):
        lhs, rhs = me.series_transform(RationalPolynomial([1]), x)
        assert lhs == pytest.approx(math.exp(x), rel=1e-15)
        assert rhs == pytest.approx(math.exp(x), rel=1e-15)

    def test_cubic(self):
        lhs, rhs = me.series_transform(RationalPolynomial([0, -1, 0, 1]), 2.0)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_zero(self):
        assert me.series_transform(RationalPolynomial(), 3.0) == (0.0, 0.0)

    @settings(max_examples=40, deadline=None)
    @given(polys(6), st.floats(-20, 20))
    def test_property(self, f, x):
        lhs, rhs = me.series_transform(f, x)
        scale = math.exp(x) * sum(abs(float(c)) * float(ep.phi_poly(n)(abs(Fraction(x))) + 1)
                                  for n, c in enumerate(f.coeffs))
        assert abs(lhs - rhs) <= 1e-12 * scale + 1e-300

    def test_limits(self):
        with pytest.raises(ValueError):
            me.series_transform(RationalPolynomial.monomial(21), 1.0)
        with pytest.raises(ValueError):
            me.series_transform(RationalPolynomial([1]), 60.0)
        with pytest.raises(NonConvergenceError):
            me.series_transform(RationalPolynomial.monomial(5), 40.0, max_terms=20)


def test_stirling_weights_sum_to_phi():
    # (xD)^n x^k picks k^n, which equals sum_j {n j} k(k-1)...(k-j+1)
    for n in range(8):
        for k in range(10):
            falling = [math.perm(k, j) for j in range(n + 1)]
            assert sum(en.stirling2(n, j) * falling[j] for j in range(n + 1)) == k ** n
