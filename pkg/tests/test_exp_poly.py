from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from expoly import exact_numbers as en
from expoly import exp_poly as ep
from expoly.errors import RootFindingError
from expoly.polynomial import RationalPolynomial

LOW_ORDER = {
    0: [1],
    1: [0, 1],
    2: [0, 1, 1],
    3: [0, 1, 3, 1],
    4: [0, 1, 7, 6, 1],
    5: [0, 1, 15, 25, 10, 1],
}

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@pytest.mark.parametrize("n", sorted(LOW_ORDER))
def test_low_order_coefficients(n):
    assert list(ep.phi(n).coeffs) == LOW_ORDER[n]


def test_string_form():
    assert str(ep.phi(4)) == "1·x⁴ + 6·x³ + 7·x² + 1·x"
    assert str(ep.phi(0)) == "1"


class TestEvaluation:
    def test_bell_at_one(self):
        assert ep.phi_eval(6, 1) == 203
        assert all(ep.phi_eval(n, 1) == en.bell(n) for n in range(40))

    def test_zero_and_minus_one(self):
        assert all(ep.phi_eval(n, 0) == 0 for n in range(1, 30))
        assert ep.phi_eval(2, -1) == 0
        values = [ep.phi_eval(n, -1) for n in range(12)]
        assert values == [1, -1, 0, 1, 1, -2, -9, -9, 50, 267, 413, -2180]

    def test_rational_argument(self):
        x = Fraction(3, 2)
        assert ep.phi_eval(3, x) == x ** 3 + 3 * x ** 2 + x


class TestIdentities:
    @pytest.mark.parametrize("n", [0, 4, 17, 30])
    def test_recurrence_sum(self, n):
        assert ep.verify_recurrence_sum(n)

    @pytest.mark.parametrize("n", [1, 5, 20])
    def test_derivative(self, n):
        assert ep.verify_derivative_identity(n)

    def test_binomial_examples(self):
        assert ep.binomial_convolution(3, 1, 1) == 22
        assert ep.binomial_convolution(0, Fraction(2, 3), 5) == 1
        for n in range(1, 12):
            assert ep.binomial_convolution(n, Fraction(7, 3), Fraction(-7, 3)) == 0

    @pytest.mark.parametrize("n", range(0, 16))
    def test_binomial_bivariate(self, n):
        assert ep.verify_binomial_identity(n)

    @pytest.mark.parametrize("n", range(1, 16))
    def test_orthogonality(self, n):
        assert ep.verify_orthogonality_relation(n)

    def test_spivey_examples(self):
        assert ep.spivey(0, 0) == 1
        assert ep.spivey(1, 1) == 2
        assert ep.spivey(3, 5) == 4140

    def test_addition_examples(self):
        assert ep.phi_addition(3, 0) == ep.phi_poly(3)
        assert ep.phi_addition(2, 2) == RationalPolynomial([0, 1, 7, 6, 1])
        assert ep.phi_addition(5, 5) == ep.phi_poly(10)

    def test_mellin_examples(self):
        assert ep.mellin_of_phi(0, 4) == ep.phi_poly(4)
        # xD(x^2 + x) = 2x^2 + x
        assert ep.mellin_of_phi(1, 2) == RationalPolynomial([0, 1, 2])
        a, b, c = ep.mellin_of_phi_forms(3, 4)
        assert a == b == c

    @pytest.mark.parametrize("p", [0, 1, 6, 12])
    def test_integral(self, p):
        lhs, rhs = ep.integrate_phi(p)
        assert lhs == rhs
        if p == 0:
            assert lhs == RationalPolynomial([0, 1])
        if p == 1:
            assert lhs == RationalPolynomial([0, 0, Fraction(1, 2)])


class TestBasis:
    def test_listed_conversions(self):
        assert ep.to_phi_basis(RationalPolynomial.monomial(2)) == [0, -1, 1]
        assert ep.to_phi_basis(RationalPolynomial.monomial(3)) == [0, 2, -3, 1]
        assert ep.to_phi_basis(RationalPolynomial.monomial(4)) == [0, -6, 11, -6, 1]
        assert ep.to_phi_basis(ep.phi_poly(3)) == [0, 0, 0, 1]

    def test_from_basis(self):
        assert ep.from_phi_basis([0, -1, 1]) == RationalPolynomial.monomial(2)
        assert ep.from_phi_basis([1]) == RationalPolynomial([1])

    @settings(max_examples=50, deadline=None)
    @given(st.lists(fractions, min_size=1, max_size=12))
    def test_round_trip(self, c):
        p = ep.from_phi_basis(c)
        back = ep.to_phi_basis(p)
        trimmed = list(c)
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed.pop()
        if all(v == 0 for v in trimmed):
            assert all(v == 0 for v in back)
        else:
            assert back == trimmed
        assert ep.from_phi_basis(back) == p


def test_generating_function_table():
    order = 12
    table = ep.generating_function_table(order)
    for n in range(order + 1):
        for j in range(n + 1):
            assert table[n][j] == Fraction(en.stirling2(n, j), factorial(n))
        assert all(v == 0 for v in table[n][n + 1:])


class TestRoots:
    def test_small_cases(self):
        assert ep.phi_roots(1) == [0.0]
        assert ep.phi_roots(2) == pytest.approx([-1.0, 0.0], abs=1e-15)
        r = ep.phi_roots(3)
        assert r == pytest.approx([(-3 - 5 ** 0.5) / 2, (-3 + 5 ** 0.5) / 2, 0.0], rel=1e-14)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_against_companion_matrix(self, n):
        ref = np.sort(np.roots(list(ep.phi(n).coeffs)[::-1]).real)
        assert ep.phi_roots(n) == pytest.approx(list(ref), rel=1e-8, abs=1e-10)

    @pytest.mark.parametrize("n", range(1, 26))
    def test_contract(self, n):
        roots = ep.phi_roots(n)
        assert len(roots) == n
        assert all(r <= 0 for r in roots)
        assert roots[-1] == 0.0
        assert all(b > a for a, b in zip(roots, roots[1:]))

    def test_interlacing(self):
        for n in range(2, 25):
            lo, hi = ep.phi_roots(n), ep.phi_roots(n + 1)
            assert all(hi[i] < lo[i] < hi[i + 1] for i in range(n - 1))

    def test_range(self):
        with pytest.raises(ValueError):
            ep.phi_roots(0)
        with pytest.raises(ValueError):
            ep.phi_roots(26)


def test_phi_cache_consistency():
    assert ep.phi(40).coeffs == tuple(en.stirling2_row(40))
    assert ep.phi(40) is ep.phi(40)


def test_root_error_type_is_exported():
    assert issubclass(RootFindingError, Exception)
