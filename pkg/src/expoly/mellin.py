"""Mellin-derivative operator calculus on truncated power series.

A :class:`FormalPowerSeries` of order ``N`` knows its coefficients of
``x**0 .. x**N`` exactly; everything beyond is unknown.  Operators here keep
track of how far the result is still valid:

* coefficient maps (``xD_pow``, ``Dx_pow``, ``apply_poly_of_xD``) keep order N;
* ``derivative`` loses one order, ``shift(k)`` (multiply by ``x**k``) gains k;
* binary operations take the minimum order of their operands.

Hence ``x^k D^k g`` is again valid to order N, which is what the Stirling
routes rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .errors import NonConvergenceError
from .exact_numbers import stirling2_row
from .exp_poly import phi_poly
from .polynomial import RationalPolynomial, to_fraction

__all__ = [
    "FormalPowerSeries",
    "xD_pow",
    "xD_pow_via_stirling",
    "apply_poly_of_xD",
    "Dx_pow",
    "Dx_pow_via_stirling",
    "xD_poly",
    "series_transform",
    "leibniz_xD",
    "xD_exp_power_check",
]


@dataclass(frozen=True)
class FormalPowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[object], order: int | None = None) -> "FormalPowerSeries":
        c = [to_fraction(v) for v in coeffs]
        if order is None:
            order = len(c) - 1
        c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(c))

    @classmethod
    def constant(cls, value: object, order: int) -> "FormalPowerSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def from_poly(cls, p: RationalPolynomial, order: int) -> "FormalPowerSeries":
        return cls.from_coeffs(p.coeffs, order)

    @classmethod
    def exp(cls, order: int, a: object = 1, p: int = 1) -> "FormalPowerSeries":
        """``exp(a x**p)`` truncated at ``x**order``."""
        a = to_fraction(a)
        c = [Fraction(0)] * (order + 1)
        for j in range(order // p + 1):
            c[p * j] = a**j / factorial(j)
        return cls(tuple(c))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> "FormalPowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a series beyond its known order")
        return FormalPowerSeries(self.coeffs[: order + 1])

    def _pair(self, other: "FormalPowerSeries") -> tuple[tuple, tuple, int]:
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1], n

    def __add__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        a, b, _ = self._pair(other)
        return FormalPowerSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        a, b, _ = self._pair(other)
        return FormalPowerSeries(tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "FormalPowerSeries":
        return FormalPowerSeries(tuple(-x for x in self.coeffs))

    def __mul__(self, other: object) -> "FormalPowerSeries":
        if not isinstance(other, FormalPowerSeries):
            s = to_fraction(other)
            return FormalPowerSeries(tuple(s * x for x in self.coeffs))
        a, b, n = self._pair(other)
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return FormalPowerSeries(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> "FormalPowerSeries":
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return FormalPowerSeries(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def shift(self, k: int) -> "FormalPowerSeries":
        """Multiply by ``x**k``; the result is known to order ``N + k``."""
        return FormalPowerSeries((Fraction(0),) * k + self.coeffs)

    def map_coeffs(self, f: Callable[[int], object]) -> "FormalPowerSeries":
        """``c_k -> f(k) c_k``."""
        return FormalPowerSeries(tuple(to_fraction(f(k)) * c for k, c in enumerate(self.coeffs)))


def xD_pow(g: FormalPowerSeries, n: int) -> FormalPowerSeries:
    """``(x d/dx)^n g`` as the coefficient map ``c_k -> k^n c_k``; keeps the order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return g.map_coeffs(lambda k: k**n)


def _xk_Dk_sum(g: FormalPowerSeries, weights: Sequence[int]) -> FormalPowerSeries:
    """``sum_k weights[k] x^k D^k g``, valid to the order of ``g``."""
    N = g.order
    total = FormalPowerSeries.constant(0, N)
    dk = g
    for k, w in enumerate(weights):
        if k > N:
            # D^k g is entirely unknown, but x^k D^k g starts at x^k > x^N
            break
        if w:
            total = total + dk.shift(k).truncate(N) * w
        if k < N:
            dk = dk.derivative()
    return total


def xD_pow_via_stirling(g: FormalPowerSeries, n: int) -> FormalPowerSeries:
    """``(x d/dx)^n g = sum_k {n k} x^k D^k g``; valid to the full order of ``g``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _xk_Dk_sum(g, stirling2_row(n))


def apply_poly_of_xD(f: RationalPolynomial, g: FormalPowerSeries) -> FormalPowerSeries:
    """``f(xD) g`` for a polynomial ``f``: the map ``c_k -> f(k) c_k``."""
    return g.map_coeffs(f)


def Dx_pow(g: FormalPowerSeries, n: int) -> FormalPowerSeries:
    """``(d/dx x)^n g`` as the map ``c_k -> (k+1)^n c_k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return g.map_coeffs(lambda k: (k + 1) ** n)


def Dx_pow_via_stirling(g: FormalPowerSeries, n: int) -> FormalPowerSeries:
    """``(d/dx x)^n g = sum_k {n+1 k+1} x^k D^k g``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _xk_Dk_sum(g, stirling2_row(n + 1)[1:])


def xD_poly(p: RationalPolynomial, n: int) -> RationalPolynomial:
    """``(x d/dx)^n`` on a polynomial: ``p_k -> k^n p_k``."""
    return RationalPolynomial(c * k**n for k, c in enumerate(p.coeffs))


def leibniz_xD(f: RationalPolynomial, g: RationalPolynomial, n: int) -> bool:
    """Exact check of the Leibniz rule for ``(x d/dx)^n (f g)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = xD_poly(f * g, n)
    rhs = RationalPolynomial()
    for k in range(n + 1):
        rhs = rhs + xD_poly(f, n - k) * xD_poly(g, k) * comb(n, k)
    return lhs == rhs


def xD_exp_power_check(a: object, p: int, n: int, order: int) -> bool:
    """``(xD)^n e^{a x^p}`` against ``p^n phi_n(a x^p) e^{a x^p}`` to ``order``."""
    if p < 1 or n < 0:
        raise ValueError("need p >= 1 and n >= 0")
    if order < n * p:
        raise ValueError("order must be at least n * p")
    e = FormalPowerSeries.exp(order, a, p)
    lhs = xD_pow(e, n)
    poly = phi_poly(n).substitute_monomial(a, p) * p**n
    rhs = FormalPowerSeries.from_poly(poly, max(order, poly.degree)).truncate(order) * e
    return lhs == rhs


def series_transform(f: RationalPolynomial, x: float, max_terms: int = 10_000) -> tuple[float, float]:
    """Both sides of ``sum_k f(k) x^k/k! = e^x sum_n a_n phi_n(x)``.

    ``a_n`` are the monomial coefficients of ``f``.  The left side is summed
    term by term, with every term and partial sum held as an exact rational
    (``x`` as a float is a dyadic rational), so alternating sums at negative
    ``x`` lose nothing to cancellation.  Summation stops once the terms are
    past their peak and the last term is below ``1e-16`` of the partial sum.
    The right side is ``exp(x)`` times the exactly evaluated polynomial.
    """
    if f.degree > 20:
        raise ValueError("f must have degree <= 20")
    if not abs(x) <= 50:
        raise ValueError("|x| must be <= 50")
    xr = Fraction(x)
    if f.degree < 0:
        return 0.0, 0.0
    deg = max(f.degree, 0)
    start = math.ceil(abs(x)) + deg + 1
    partial = Fraction(0)
    power = Fraction(1)  # x^k / k!
    for k in range(max_terms):
        if k:
            power = power * xr / k
        term = f(k) * power
        partial += term
        if k >= start and not power:
            break  # x == 0: every later term vanishes
        if k >= start and term and abs(term) <= Fraction(1, 10**16) * abs(partial):
            break
    else:
        raise NonConvergenceError(f"left sum did not converge within {max_terms} terms")
    poly = sum((c * phi_poly(n)(xr) for n, c in enumerate(f.coeffs)), Fraction(0))
    return float(partial), math.exp(x) * float(poly)
