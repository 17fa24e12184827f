"""Floating-point evaluation of the infinite series around ``phi_n``.

Each evaluator returns a :class:`SeriesResult` with the number of terms used
and a tail estimate taken from the ratio of the last two terms once they
decrease.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import NonConvergenceError
from .exp_poly import phi

__all__ = [
    "SeriesResult",
    "SeriesConfig",
    "dobinski_sum",
    "phi_fractional",
    "polyexponential",
    "linear_dependence_terms",
    "linear_dependence_residual",
]


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_bound: float

    def __post_init__(self) -> None:
        if self.tail_bound < 0 or self.terms_used < 1:
            raise ValueError("invalid series result")


@dataclass(frozen=True)
class SeriesConfig:
    rel_stop: float = 1e-16
    max_terms: int = 10_000


DEFAULT = SeriesConfig()


def _tail(last: float, prev: float) -> float:
    """Geometric tail bound from two consecutive term magnitudes."""
    if prev == 0:
        return 0.0 if last == 0 else math.inf
    r = last / prev
    return last * r / (1 - r) if r < 1 else math.inf


def dobinski_sum(n: int, config: SeriesConfig = DEFAULT) -> SeriesResult:
    """``S_n = sum_k k^n / k!`` for ``0 <= n <= 60``; close to ``e * bell(n)``.

    Every term is the correctly rounded quotient of two exact integers and
    the terms are added with ``math.fsum``.
    """
    if not 0 <= n <= 60:
        raise ValueError("n must be in 0..60")
    terms: list[float] = []
    fact = 1
    peak = max(1, n)  # terms k^n/k! increase at most up to k = n
    for k in range(config.max_terms):
        if k:
            fact *= k
        t = k**n / fact
        terms.append(t)
        if k > peak and t < config.rel_stop * math.fsum(terms):
            return SeriesResult(complex(math.fsum(terms)), len(terms), _tail(t, terms[-2]))
    raise NonConvergenceError(f"Dobinski sum for n={n} did not converge")


def phi_fractional(z: complex, x: float, config: SeriesConfig = DEFAULT) -> SeriesResult:
    """``e^{-x} sum_k k^z x^k / k!`` for ``x > 0``.

    ``k^z`` uses the principal branch ``exp(z log k)``; the ``k = 0`` term is
    1 when ``z == 0`` and 0 otherwise (``Re z > 0`` is assumed then).
    """
    if not x > 0:
        raise ValueError("x must be positive")
    z = complex(z)
    is_int = z.imag == 0 and z.real == int(z.real) and z.real >= 0
    logx = math.log(x)
    re_terms: list[float] = []
    im_terms: list[float] = []
    prev = 0.0
    for k in range(config.max_terms):
        if k == 0:
            t = complex(1.0 if z == 0 else 0.0)
        elif is_int:
            # exact integer power keeps integer z on the nose
            t = complex(math.exp(k * logx - math.lgamma(k + 1)) * k ** int(z.real))
        else:
            t = cmath.exp(z * math.log(k) + k * logx - math.lgamma(k + 1))
        re_terms.append(t.real)
        im_terms.append(t.imag)
        mag = abs(t)
        total = complex(math.fsum(re_terms), math.fsum(im_terms))
        if k > x + abs(z) + 1 and mag < config.rel_stop * abs(total):
            return SeriesResult(total * math.exp(-x), k + 1, _tail(mag, prev) * math.exp(-x))
        prev = mag
    raise NonConvergenceError(f"phi_z series at x={x} did not converge")


def polyexponential(s: int, x: float, lam: float, config: SeriesConfig = DEFAULT) -> SeriesResult:
    """``e_s(x, lam) = sum_n x^n / (n! (n+lam)^s)`` for integer ``s``.

    With integer ``s`` and float inputs every term is an exact rational, so
    the partial sums are accumulated exactly and rounded once at the end.
    """
    if not lam > 0:
        raise ValueError("lambda must be positive")
    if abs(s) > 8 or abs(x) > 50:
        raise ValueError("need |s| <= 8 and |x| <= 50")
    xr, lr = Fraction(x), Fraction(lam)
    partial = Fraction(0)
    power = Fraction(1)
    stop = Fraction(config.rel_stop)
    prev = 0.0
    for n in range(config.max_terms):
        if n:
            power = power * xr / n
        t = power / (n + lr) ** s
        partial += t
        if n > abs(x) + abs(s) + 1 and (not power or t and abs(t) <= stop * abs(partial)):
            return SeriesResult(complex(float(partial)), n + 1, _tail(abs(float(t)), prev))
        prev = abs(float(t))
    raise NonConvergenceError("polyexponential series did not converge")


def _ld_check(x: float, k: int, N: int) -> None:
    if not abs(x) <= 3:
        raise ValueError("|x| must be <= 3")
    if not isinstance(k, int) or k == 0 or abs(k) > 3:
        raise ValueError("k must be a nonzero int with |k| <= 3")
    if not 1 <= N <= 80:
        raise ValueError("N must be in 1..80")


def linear_dependence_terms(x: float, k: int, N: int) -> list[complex]:
    """Terms ``phi_n(x) (2 k pi i)^n / n!`` for ``n = 1..N``."""
    _ld_check(x, k, N)
    xr = Fraction(x)
    with mpmath.workdps(40):
        w = 2 * k * mpmath.pi * 1j
        out = []
        for n in range(1, N + 1):
            v = Fraction(phi(n)(xr))
            t = mpmath.mpf(v.numerator) / v.denominator * w**n / mpmath.factorial(n)
            out.append(complex(t))
    return out


def linear_dependence_residual(x: float, k: int, N: int) -> float:
    """``|sum_{n=1}^N phi_n(x) (2 k pi i)^n / n!|``.

    The full series sums to 0.  ``phi_n(x)`` is exact and the sum is formed
    in extended precision sized to the largest term, so the result is the
    true truncation residual rather than cancellation noise.
    """
    _ld_check(x, k, N)
    xr = Fraction(x)
    vals = [Fraction(phi(n)(xr)) for n in range(1, N + 1)]
    biggest = max((abs(v) for v in vals), default=Fraction(0))
    digits = 40 + max(0, len(str(int(biggest))))
    with mpmath.workdps(digits):
        w = 2 * k * mpmath.pi * 1j
        total = mpmath.mpc(0)
        fact = mpmath.mpf(1)
        wn = mpmath.mpc(1)
        for n, v in enumerate(vals, start=1):
            fact *= n
            wn *= w
            t = mpmath.mpf(v.numerator) / v.denominator * wn / fact
            if abs(t) > 1e308:
                raise OverflowError("term exceeds double range; N * |k| too large")
            total += t
        return float(abs(total))
