"""Exponential (single-variable Bell) polynomials.

``phi(n)`` is the degree-``n`` polynomial with ``(x d/dx)^n e^x = phi_n(x) e^x``.
Its coefficients are the second-kind Stirling numbers.  Most functions here
either build ``phi_n`` or check one of its exact identities with rational
arithmetic, so a check either holds exactly or fails.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import RootFindingError
from .exact_numbers import bernoulli, bell, stirling1_row, stirling2_row
from .polynomial import RationalPolynomial, format_terms, to_fraction

__all__ = [
    "ExpPolynomial",
    "phi",
    "phi_poly",
    "phi_eval",
    "verify_recurrence_sum",
    "verify_derivative_identity",
    "binomial_convolution",
    "verify_binomial_identity",
    "verify_orthogonality_relation",
    "spivey",
    "phi_addition",
    "mellin_of_phi",
    "mellin_of_phi_forms",
    "to_phi_basis",
    "from_phi_basis",
    "integrate_phi",
    "generating_function_table",
    "phi_roots",
]


@dataclass(frozen=True)
class ExpPolynomial:
    """``phi_n`` as a dense integer coefficient list, ``coeffs[k]`` for ``x**k``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError("phi_n needs exactly n + 1 coefficients")

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def as_poly(self) -> RationalPolynomial:
        return RationalPolynomial(self.coeffs)

    def __str__(self) -> str:
        return format_terms(self.coeffs)


_PHI: list[ExpPolynomial] = [ExpPolynomial(0, (1,))]
_PHI_LOCK = threading.Lock()


def _check_n(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{name} must be a nonnegative int, got {n!r}")


def phi(n: int) -> ExpPolynomial:
    """Build ``phi_n`` from ``phi_{n+1} = x (phi_n' + phi_n)``, starting at 1."""
    _check_n(n)
    if n < len(_PHI):
        return _PHI[n]
    with _PHI_LOCK:
        while len(_PHI) <= n:
            c = _PHI[-1].coeffs
            d = len(c)
            # coefficient of x^k in phi_n' + phi_n, shifted up by one
            inner = [c[k] + (k + 1) * c[k + 1] if k + 1 < d else c[k] for k in range(d)]
            _PHI.append(ExpPolynomial(d, (0, *inner)))
        return _PHI[n]


def phi_poly(n: int) -> RationalPolynomial:
    return phi(n).as_poly()


def phi_eval(n: int, x: object) -> Fraction:
    """Exact ``phi_n(x)`` for rational ``x``."""
    return Fraction(phi(n)(to_fraction(x)))


def verify_recurrence_sum(n: int) -> bool:
    """``phi_{n+1} == x * sum_k C(n,k) phi_k`` as polynomials."""
    _check_n(n)
    rhs = RationalPolynomial()
    for k in range(n + 1):
        rhs = rhs + phi_poly(k) * comb(n, k)
    return phi_poly(n + 1) == rhs.shift(1)


def verify_derivative_identity(n: int) -> bool:
    """``phi_n' == sum_{k<n} C(n,k) phi_k``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    rhs = RationalPolynomial()
    for k in range(n):
        rhs = rhs + phi_poly(k) * comb(n, k)
    return phi_poly(n).derivative() == rhs


def binomial_convolution(n: int, x: object, y: object) -> Fraction:
    """Right side of ``phi_n(x+y) = sum_k C(n,k) phi_k(x) phi_{n-k}(y)``."""
    _check_n(n)
    x, y = to_fraction(x), to_fraction(y)
    return sum((comb(n, k) * phi_eval(k, x) * phi_eval(n - k, y) for k in range(n + 1)),
               Fraction(0))


def verify_binomial_identity(n: int) -> bool:
    """Check the binomial convolution as an identity of polynomials in ``x, y``.

    Both sides are expanded into a dict of ``(i, j) -> coefficient of x^i y^j``.
    """
    _check_n(n)
    lhs: dict[tuple[int, int], int] = {}
    for j, s in enumerate(phi(n).coeffs):
        if s:
            for i in range(j + 1):
                key = (i, j - i)
                lhs[key] = lhs.get(key, 0) + s * comb(j, i)
    rhs: dict[tuple[int, int], int] = {}
    for k in range(n + 1):
        ck = comb(n, k)
        for i, a in enumerate(phi(k).coeffs):
            if a:
                for j, b in enumerate(phi(n - k).coeffs):
                    if b:
                        rhs[(i, j)] = rhs.get((i, j), 0) + ck * a * b
    strip = lambda d: {key: v for key, v in d.items() if v}
    return strip(lhs) == strip(rhs)


def verify_orthogonality_relation(n: int) -> bool:
    """``sum_k C(n,k) phi_k(x) phi_{n-k}(-x)`` is the zero polynomial for n >= 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    total = RationalPolynomial()
    for k in range(n + 1):
        total = total + phi_poly(k) * phi_poly(n - k).scale(-1) * comb(n, k)
    return total == RationalPolynomial()


def spivey(n: int, m: int) -> int:
    """Double sum ``sum_k sum_j C(n,k) {m j} j^(n-k) b_k``; equals ``bell(n+m)``.

    Uses ``0**0 == 1``, which Python's int power already does.
    """
    _check_n(n)
    _check_n(m, "m")
    row = stirling2_row(m)
    return sum(comb(n, k) * s * j ** (n - k) * bell(k)
               for k in range(n + 1) for j, s in enumerate(row))


def phi_addition(n: int, m: int) -> RationalPolynomial:
    """Expand ``sum_k sum_j C(n,k) {m j} j^(n-k) x^j phi_k(x)``; equals ``phi_{n+m}``."""
    _check_n(n)
    _check_n(m, "m")
    row = stirling2_row(m)
    total = RationalPolynomial()
    for k in range(n + 1):
        inner = RationalPolynomial([s * j ** (n - k) for j, s in enumerate(row)])
        total = total + inner * phi_poly(k) * comb(n, k)
    return total


def mellin_of_phi(n: int, m: int) -> RationalPolynomial:
    """``(x d/dx)^n phi_m`` as ``sum_k {m k} k^n x^k``."""
    _check_n(n)
    _check_n(m, "m")
    return RationalPolynomial([s * k**n for k, s in enumerate(stirling2_row(m))])


def mellin_of_phi_forms(n: int, m: int) -> tuple[RationalPolynomial, RationalPolynomial,
                                                  RationalPolynomial]:
    """Three routes to ``(x d/dx)^n phi_m``.

    Returns (operator applied ``n`` times, coefficient form,
    ``sum_k C(n,k) phi_{m+k}(x) phi_{n-k}(-x)``).
    """
    direct = phi_poly(m)
    for _ in range(n):
        direct = direct.derivative().shift(1)
    product_form = RationalPolynomial()
    for k in range(n + 1):
        product_form = product_form + phi_poly(m + k) * phi_poly(n - k).scale(-1) * comb(n, k)
    return direct, mellin_of_phi(n, m), product_form


def to_phi_basis(p: RationalPolynomial | Sequence[object]) -> list[Fraction]:
    """Coefficients ``c`` with ``p == sum_k c[k] phi_k``.

    Each monomial ``x^j`` expands with signed first-kind Stirling numbers.
    """
    if not isinstance(p, RationalPolynomial):
        p = RationalPolynomial(p)
    out = [Fraction(0)] * len(p)
    for j, pj in enumerate(p):
        if pj:
            for k, s in enumerate(stirling1_row(j)):
                if s:
                    out[k] += pj * (-1) ** (j - k) * s
    while out and out[-1] == 0:
        out.pop()
    return out


def from_phi_basis(c: Sequence[object]) -> RationalPolynomial:
    total = RationalPolynomial()
    for k, ck in enumerate(c):
        ck = to_fraction(ck)
        if ck:
            total = total + phi_poly(k) * ck
    return total


def integrate_phi(p: int) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Both sides of the Bernoulli formula for ``int_0^x phi_p(t) dt``.

    Left: the exact antiderivative.  Right:
    ``1/(p+1) sum_{k=1}^{p+1} C(p+1,k) B_{p+1-k} phi_k(x)``.
    """
    _check_n(p, "p")
    lhs = phi_poly(p).antiderivative()
    rhs = RationalPolynomial()
    for k in range(1, p + 2):
        rhs = rhs + phi_poly(k) * (comb(p + 1, k) * bernoulli(p + 1 - k))
    return lhs, rhs * Fraction(1, p + 1)


def generating_function_table(order: int) -> list[list[Fraction]]:
    """Coefficient table of ``exp(x (e^z - 1))`` up to ``z**order``.

    Entry ``[n][j]`` is the coefficient of ``x^j z^n``, obtained by expanding
    ``exp(x u) = sum_j x^j u^j / j!`` with ``u = e^z - 1`` as a truncated
    power series with rational coefficients.  Multiplying row ``n`` by ``n!``
    should reproduce the coefficients of ``phi_n``.
    """
    from .mellin import FormalPowerSeries

    u = FormalPowerSeries.exp(order) - FormalPowerSeries.constant(1, order)
    table = [[Fraction(0)] * (order + 1) for _ in range(order + 1)]
    power = FormalPowerSeries.constant(1, order)
    fact = 1
    for j in range(order + 1):
        if j:
            power = power * u
            fact *= j
        for n, c in enumerate(power.coeffs):
            table[n][j] = c / fact
    return table


# --- roots -----------------------------------------------------------------

def _sign_at(coeffs: Sequence[int], x: float) -> int:
    """Exact sign of an integer polynomial at a float (floats are dyadic rationals)."""
    num, den = x.as_integer_ratio()
    acc = 0
    denpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * denpow
        denpow *= den
    return (acc > 0) - (acc < 0)


def _bisect(coeffs: Sequence[int], lo: float, hi: float) -> float:
    s_lo, s_hi = _sign_at(coeffs, lo), _sign_at(coeffs, hi)
    if s_lo == 0:
        return lo
    if s_hi == 0:
        return hi
    if s_lo == s_hi:
        raise RootFindingError(f"no sign change on [{lo!r}, {hi!r}]")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return lo if abs(lo) < abs(hi) else hi
        s = _sign_at(coeffs, mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid


def phi_roots(n: int) -> list[float]:
    """Real roots of ``phi_n`` in increasing order, for ``1 <= n <= 25``.

    The roots of ``phi_{k+1}`` are 0 together with the roots of
    ``phi_k + phi_k'`` (which is ``phi_{k+1}/x``), and those interlace with
    the roots of ``phi_k``.  Starting from ``phi_1`` each level is bracketed by
    the previous one and refined by bisection, with signs decided by exact
    integer evaluation at the float endpoints.
    """
    if not isinstance(n, int) or not 1 <= n <= 25:
        raise ValueError(f"n must be in 1..25, got {n!r}")
    roots = [0.0]
    for k in range(1, n):
        q = phi(k + 1).coeffs[1:]  # phi_{k+1}(x) / x
        # Cauchy bound for the leftmost root
        bound = 1.0 + max(abs(c) for c in q[:-1]) / q[-1]
        brackets = [(-bound, roots[0])] + list(zip(roots[:-1], roots[1:]))
        new = [_bisect(q, lo, hi) for lo, hi in brackets]
        if any(b <= a for a, b in zip(new, new[1:])) or len(new) != k:
            raise RootFindingError(f"root isolation failed at degree {k + 1}")
        roots = new + [0.0]
    return roots
