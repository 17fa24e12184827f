"""Fourier integrals of the Gamma function and the semi-orthogonality of phi_n.

Two families of moments are evaluated both by quadrature and in closed form:

    single:  int e^{-i lam t} t^n Gamma(a+it) dt
           = i^n 2 pi e^{a lam} e^{-e^lam} sum_k C(n,k) a^{n-k} phi_k(-e^lam)

    pair:    int e^{-i mu t} t^n Gamma(a+it) Gamma(b-it) dt
           = i^n 2 pi e^{-b mu} sum_m d_m Gamma(a+b+m) / (1+e^{-mu})^{a+b+m}
             with d_m = (-1)^m sum_k C(n,k) {k m} a^{n-k}

The rational weights in both closed forms are computed exactly; only the
transcendental factors are evaluated in floating point (at 40 digits, then
rounded once).

At ``a = 1`` and ``lam = 0`` the single moment reduces to
``G_n(1) = -2 pi i^n e^{-1} phi_{n+1}(-1)``.  Note the leading minus sign: it
follows from ``phi_{n+1}(-1) = -sum_k C(n,k) phi_k(-1)`` and is confirmed
by quadrature (``G_0(1) = +2 pi / e``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath
import numpy as np

from .errors import QuadratureError
from .exact_numbers import bernoulli, bernoulli_recurrence, stirling2_row
from .exp_poly import phi, phi_poly
from .lanczos import gamma_complex
from .polynomial import RationalPolynomial
from .quadrature import QuadConfig, QuadratureResult, gauss_kronrod

__all__ = [
    "MomentClosedForm",
    "gamma_complex",
    "moment_single_closed",
    "moment_single_quad",
    "moment_pair_closed",
    "moment_pair_quad",
    "moment_at_one",
    "polynomial_moment",
    "polynomial_moment_at_one",
    "semi_orthogonality_rhs",
    "semi_orthogonality_exact",
    "semi_orthogonality_single",
    "semi_orthogonality_quad",
    "semi_orthogonality_parseval",
    "sinh_integral_closed",
    "sinh_integral_check",
    "truncation_window",
]

_I_POW = (1, 1j, -1, -1j)
_T_MAX = 100.0


@dataclass(frozen=True)
class MomentClosedForm:
    """Closed-form moment ``i^phase * real_value``.

    ``weights`` are the exact rational coefficients of the finite sum (indexed
    by ``m``); ``real_value`` is the real factor after the transcendental
    parts are applied.
    """

    weights: tuple[Fraction, ...]
    phase: int
    real_value: float
    float_value: complex

    def __post_init__(self) -> None:
        expected = _I_POW[self.phase % 4] * self.real_value
        if abs(self.float_value - expected) > 1e-13 * abs(expected):
            raise ValueError("float_value inconsistent with phase and real part")


def _check_moment(n: int, *params: float) -> None:
    if not isinstance(n, int) or not 0 <= n <= 20:
        raise ValueError("n must be an int in 0..20")
    for p in params:
        if not (math.isfinite(p) and p > 0):
            raise ValueError("a and b must be positive and finite")


def _single_weights(n: int, a: Fraction) -> list[Fraction]:
    """``w_m = sum_k C(n,k) a^{n-k} {k m}``, so the sum equals ``sum_m w_m y^m`` at ``y = -e^lam``."""
    w = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        ck = comb(n, k) * a ** (n - k)
        for m, s in enumerate(stirling2_row(k)):
            if s:
                w[m] += ck * s
    return w


def _closed(weights: list[Fraction], n: int, real: mpmath.mpf) -> MomentClosedForm:
    r = float(real)
    return MomentClosedForm(tuple(weights), n % 4, r, _I_POW[n % 4] * r)


def moment_single_closed(n: int, a: float, lam: float) -> MomentClosedForm:
    """Closed form of ``int e^{-i lam t} t^n Gamma(a+it) dt`` for ``a > 0``."""
    _check_moment(n, a)
    w = _single_weights(n, Fraction(a))
    with mpmath.workdps(40):
        y = mpmath.exp(lam)
        s = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * (-y) ** m
                        for m, c in enumerate(w))
        real = 2 * mpmath.pi * mpmath.exp(a * mpmath.mpf(lam) - y) * s
        return _closed(w, n, real)


def moment_pair_closed(n: int, a: float, b: float, mu: float) -> MomentClosedForm:
    """Closed form of ``int e^{-i mu t} t^n Gamma(a+it) Gamma(b-it) dt``."""
    _check_moment(n, a, b)
    w = [c * (-1) ** m for m, c in enumerate(_single_weights(n, Fraction(a)))]
    with mpmath.workdps(40):
        ab = mpmath.mpf(a) + mpmath.mpf(b)
        base = 1 + mpmath.exp(-mpmath.mpf(mu))
        s = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator
                        * mpmath.gamma(ab + m) / base ** (ab + m)
                        for m, c in enumerate(w))
        real = 2 * mpmath.pi * mpmath.exp(-mpmath.mpf(b) * mu) * s
        return _closed(w, n, real)


def truncation_window(power: float, rate: float, const: float, tol: float = 1e-16) -> float:
    """Smallest ``T`` (step 1) with ``int_T^inf const t^power e^{-rate t} dt < tol``.

    Uses ``int_T^inf t^p e^{-r t} dt <= T^p e^{-r T} / (r - p/T)`` for ``T > p/r``.
    """
    T = max(8.0, math.ceil(2 * power / rate) + 1)
    while T <= _T_MAX:
        bound = const * math.exp(power * math.log(T) - rate * T) / (rate - power / T)
        if bound < tol:
            return T
        T += 1.0
    raise QuadratureError(f"truncation window would exceed {_T_MAX} (power={power})")


def _tail(power: float, rate: float, const: float, T: float) -> float:
    return 2 * const * math.exp(power * math.log(T) - rate * T) / (rate - power / T)


def moment_single_quad(n: int, a: float, lam: float,
                       config: QuadConfig = QuadConfig()) -> QuadratureResult:
    """Quadrature of ``int e^{-i lam t} t^n Gamma(a+it) dt`` on ``[-T, T]``.

    ``|Gamma(a+it)| ~ sqrt(2 pi) |t|^{a-1/2} e^{-pi |t|/2}`` fixes ``T``.
    """
    _check_moment(n, a)
    power, rate, const = n + a - 0.5, math.pi / 2, 2 * math.sqrt(2 * math.pi)
    T = truncation_window(power, rate, const)

    def f(t: np.ndarray) -> np.ndarray:
        return np.exp(-1j * lam * t) * t**n * gamma_complex(a + 1j * t)

    res = gauss_kronrod(f, -T, T, config)
    return QuadratureResult(res.value, res.abs_error_estimate + _tail(power, rate, const, T),
                            res.evaluations, T)


def moment_pair_quad(n: int, a: float, b: float, mu: float,
                     config: QuadConfig = QuadConfig()) -> QuadratureResult:
    """Quadrature of ``int e^{-i mu t} t^n Gamma(a+it) Gamma(b-it) dt`` on ``[-T, T]``."""
    _check_moment(n, a, b)
    if abs(mu) > 5:
        raise ValueError("|mu| must be <= 5")
    power, rate, const = n + a + b - 1, math.pi, 8 * math.pi

    T = truncation_window(power, rate, const)

    def f(t: np.ndarray) -> np.ndarray:
        return (np.exp(-1j * mu * t) * t**n
                * gamma_complex(a + 1j * t) * gamma_complex(b - 1j * t))

    res = gauss_kronrod(f, -T, T, config)
    return QuadratureResult(res.value, res.abs_error_estimate + _tail(power, rate, const, T),
                            res.evaluations, T)


def moment_at_one(n: int) -> complex:
    """``G_n(1) = -2 pi i^n e^{-1} phi_{n+1}(-1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return -2 * math.pi / math.e * _I_POW[n % 4] * float(phi(n + 1)(-1))


def polynomial_moment(p: RationalPolynomial, a: float) -> complex:
    """``int p(t) Gamma(a+it) dt`` as ``sum_n p_n G_n(a)`` from the closed form."""
    if p.degree > 20:
        raise ValueError("degree must be <= 20")
    re, im = [], []
    for n, c in enumerate(p.coeffs):
        if c:
            v = float(c) * moment_single_closed(n, a, 0.0).float_value
            re.append(v.real)
            im.append(v.imag)
    return complex(math.fsum(re), math.fsum(im))


def polynomial_moment_at_one(p: RationalPolynomial) -> complex:
    """``int p(t) Gamma(1+it) dt = -(2 pi / e) sum_n p_n i^n phi_{n+1}(-1)``.

    The inner sum is exact: its real and imaginary parts are rationals.
    """
    re = Fraction(0)
    im = Fraction(0)
    for n, c in enumerate(p.coeffs):
        v = c * phi(n + 1)(-1)
        r = n % 4
        if r == 0:
            re += v
        elif r == 1:
            im += v
        elif r == 2:
            re -= v
        else:
            im -= v
    scale = -2 * math.pi / math.e
    return complex(scale * float(re), scale * float(im))


# --- semi-orthogonality ------------------------------------------------------

def _check_nm(n: int, m: int) -> None:
    if not (isinstance(n, int) and isinstance(m, int) and n >= 1 and m >= 1):
        raise ValueError("n and m must be positive ints")


def semi_orthogonality_rhs(n: int, m: int) -> Fraction:
    """``(-1)^{n-1} (2^{n+m} - 1)/(n+m) B_{n+m}``."""
    _check_nm(n, m)
    s = n + m
    return (-1) ** (n - 1) * Fraction(2**s - 1, s) * bernoulli(s)


def semi_orthogonality_exact(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Double Stirling sum ``sum (-1)^{k+j} {n k}{m j} (k+j-1)!/2^{k+j}`` and the Bernoulli side.

    The sum is the termwise integral of ``phi_n(-x) phi_m(-x) e^{-2x}/x``;
    ``k = j = 0`` never contributes since ``{n 0} = 0`` for ``n >= 1``.
    """
    _check_nm(n, m)
    rn, rm = stirling2_row(n), stirling2_row(m)
    lhs = Fraction(0)
    for k, a in enumerate(rn):
        if not a:
            continue
        for j, b in enumerate(rm):
            if b:
                lhs += Fraction((-1) ** (k + j) * a * b * math.factorial(k + j - 1), 2 ** (k + j))
    return lhs, semi_orthogonality_rhs(n, m)


def semi_orthogonality_single(m: int) -> tuple[Fraction, Fraction]:
    """``sum_j (-1)^{j+1} {m j} j!/2^{j+1}`` against ``(2^{m+1}-1)/(m+1) B_{m+1}``.

    The Bernoulli number on the right comes from the binomial recurrence, not
    from this sum, so the comparison is not circular.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lhs = sum((Fraction((-1) ** (j + 1) * s * math.factorial(j), 2 ** (j + 1))
               for j, s in enumerate(stirling2_row(m))), Fraction(0))
    b = bernoulli_recurrence(m + 1)[m + 1]
    return lhs, Fraction(2 ** (m + 1) - 1, m + 1) * b


def semi_orthogonality_quad(n: int, m: int, dps: int = 30) -> QuadratureResult:
    """Quadrature of ``int_0^inf phi_n(-x) phi_m(-x) e^{-2x} dx/x``.

    The integrand swings through values far larger than the result (and the
    result is exactly 0 when ``n+m`` is odd), so it is integrated with
    tanh-sinh quadrature in ``dps``-digit arithmetic.  At ``x = 0`` the
    integrand extends continuously by 0.
    """
    _check_nm(n, m)
    if n + m > 20:
        raise ValueError("n + m must be <= 20")
    pn, pm = phi_poly(n).scale(-1), phi_poly(m).scale(-1)
    count = 0
    with mpmath.workdps(dps):
        cn = [mpmath.mpf(c.numerator) / c.denominator for c in pn.coeffs]
        cm = [mpmath.mpf(c.numerator) / c.denominator for c in pm.coeffs]

        def horner(c, x):
            acc = mpmath.mpf(0)
            for v in reversed(c):
                acc = acc * x + v
            return acc

        def f(x):
            nonlocal count
            count += 1
            if x == 0:
                return mpmath.mpf(0)
            return horner(cn, x) * horner(cm, x) * mpmath.exp(-2 * x) / x

        s = n + m
        points = [0, 1, s / 2 + 1, 2 * s + 4, 6 * s + 30, mpmath.inf]
        val, err = mpmath.quad(f, points, error=True)
        return QuadratureResult(complex(val), float(err), count, math.inf)


def semi_orthogonality_parseval(n: int, m: int, config: QuadConfig = QuadConfig()) -> QuadratureResult:
    """``(1/2 pi) int (-it)^{n-1} (it)^{m-1} |Gamma(1+it)|^2 dt`` in double precision."""
    _check_nm(n, m)
    phase = (-1j) ** (n - 1) * 1j ** (m - 1)
    power, rate, const = n + m - 1, math.pi, 4 * math.pi
    T = truncation_window(power, rate, const)

    def f(t: np.ndarray) -> np.ndarray:
        g = gamma_complex(1 + 1j * t)
        return phase * t ** (n + m - 2) * (g.real**2 + g.imag**2) / (2 * math.pi)

    res = gauss_kronrod(f, -T, T, config)
    return QuadratureResult(res.value, res.abs_error_estimate, res.evaluations, T)


def sinh_integral_closed(p: int) -> Fraction:
    """``(2^{2p} - 1)/(2p) (-1)^{p-1} B_{2p}``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return Fraction(4**p - 1, 2 * p) * (-1) ** (p - 1) * bernoulli(2 * p)


def sinh_integral_check(p: int, config: QuadConfig = QuadConfig()) -> QuadratureResult:
    """Quadrature of ``int_0^inf t^{2p-1} / sinh(pi t) dt`` for ``1 <= p <= 8``."""
    if not 1 <= p <= 8:
        raise ValueError("p must be in 1..8")
    power = 2 * p - 1
    T = truncation_window(power, math.pi, 2.0)

    def f(t: np.ndarray) -> np.ndarray:
        # t > 0 at every Gauss-Kronrod node; e^{-pi t} form avoids overflow
        e = np.exp(-np.pi * t)
        return 2 * t**power * e / -np.expm1(-2 * np.pi * t)

    res = gauss_kronrod(f, 0.0, T, config)
    return QuadratureResult(res.value, res.abs_error_estimate, res.evaluations, T)
