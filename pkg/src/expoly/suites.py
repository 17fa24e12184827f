"""Identity batteries run by ``expoly verify``.

Each suite returns a list of :class:`~expoly.report.Record`; failures are
collected, never raised.  The ``paper_eq`` column carries a short label of the
identity being checked.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import exact_numbers as en
from . import exp_poly as ep
from . import gamma_integrals as gi
from . import mellin as me
from .errors import ExpolyError
from .polynomial import RationalPolynomial
from .report import Record, render_value

__all__ = ["poly_suite", "mellin_suite", "semi_orth_suite", "gamma_suite", "SUITES"]

GAMMA_PARAMS = (0.5, 1.0, 2.0, 3.0)
SHIFTS = (0.0, 1.0, -1.0)


def _flag(name: str, ok: bool, tag: str) -> Record:
    return Record(name, "true" if ok else "false", "true", None, None, ok, tag)


def poly_suite(max_n: int = 12, **_) -> list[Record]:
    """Exact polynomial identities for all indices with total degree <= ``max_n``."""
    out: list[Record] = []
    for n in range(max_n + 1):
        out.append(_flag(f"coefficients n={n}",
                         list(ep.phi(n).coeffs) == list(en.stirling2_row(n)), "stirling-coefficients"))
        if n + 1 <= max_n:
            out.append(_flag(f"recurrence-sum n={n}", ep.verify_recurrence_sum(n), "recurrence-sum"))
            lhs, rhs = ep.integrate_phi(n)
            out.append(_flag(f"integral p={n}", lhs == rhs, "bernoulli-integral"))
        if n >= 1:
            out.append(_flag(f"derivative n={n}", ep.verify_derivative_identity(n), "derivative"))
            out.append(_flag(f"orthogonality n={n}", ep.verify_orthogonality_relation(n),
                             "orthogonality"))
        out.append(_flag(f"binomial n={n}", ep.verify_binomial_identity(n), "binomial"))
        basis = ep.to_phi_basis(RationalPolynomial.monomial(n))
        expected = [(-1) ** (n - k) * s for k, s in enumerate(en.stirling1_row(n))]
        ok = basis == [Fraction(e) for e in expected] and \
            ep.from_phi_basis(basis) == RationalPolynomial.monomial(n)
        out.append(_flag(f"basis x^{n}", ok, "basis-conversion"))
    for n in range(max_n + 1):
        for m in range(max_n + 1 - n):
            out.append(Record.exact(f"spivey n={n} m={m}", ep.spivey(n, m), en.bell(n + m), "spivey"))
            out.append(_flag(f"addition n={n} m={m}",
                             ep.phi_addition(n, m) == ep.phi_poly(n + m), "addition"))
            a, b, c = ep.mellin_of_phi_forms(n, m)
            out.append(_flag(f"mellin n={n} m={m}", a == b == c, "mellin-of-phi"))
    return out


def _random_series(rng: random.Random, order: int) -> me.FormalPowerSeries:
    return me.FormalPowerSeries.from_coeffs(
        [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(order + 1)])


def mellin_suite(cases: int = 100, seed: int = 0, tolerance: float | None = None, **_) -> list[Record]:
    """Operator-calculus checks on a random battery plus the series transformation."""
    rng = random.Random(seed)
    tol = 1e-10 if tolerance is None else tolerance
    out: list[Record] = []
    for i in range(cases):
        order = rng.randint(0, 12)
        n = rng.randint(0, 8)
        g = _random_series(rng, order)
        out.append(_flag(f"xD route case={i}", me.xD_pow(g, n) == me.xD_pow_via_stirling(g, n),
                         "xD-stirling"))
        out.append(_flag(f"Dx route case={i}", me.Dx_pow(g, n) == me.Dx_pow_via_stirling(g, n),
                         "Dx-stirling"))
        m = rng.randint(0, 12 - n)
        out.append(_flag(f"composition case={i}",
                         me.xD_pow(me.xD_pow(g, m), n) == me.xD_pow(g, n + m), "composition"))
        f = RationalPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 6))])
        p = RationalPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 7))])
        q = RationalPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 7))])
        out.append(_flag(f"leibniz case={i}", me.leibniz_xD(p, q, rng.randint(0, 6)), "leibniz"))
        alpha = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        lhs = me.apply_poly_of_xD(f * alpha + p, g)
        rhs = me.apply_poly_of_xD(f, g) * alpha + me.apply_poly_of_xD(p, g)
        out.append(_flag(f"linearity case={i}", lhs == rhs, "poly-of-xD"))
    for a, p, n, order in [(1, 1, 3, 10), (2, 3, 2, 12), (-1, 2, 4, 16), (Fraction(1, 3), 2, 5, 14)]:
        out.append(_flag(f"exp-power a={a} p={p} n={n}", me.xD_exp_power_check(a, p, n, order),
                         "exp-power"))
    for n in range(11):
        f = RationalPolynomial.monomial(n)
        for x in (0.5, 1.0, 2.0, 5.0):
            lhs, rhs = me.series_transform(f, x)
            out.append(Record.numeric(f"transform t^{n} x={x}", lhs, rhs, tol,
                                      tol, "series-transform"))
    return out


def semi_orth_suite(max_sum: int = 16, tolerance: float | None = None, **_) -> list[Record]:
    """Semi-orthogonality by quadrature and exactly, the single sum, and the sinh integral."""
    tol = 1e-9 if tolerance is None else tolerance
    out: list[Record] = []
    for s in range(2, max_sum + 1):
        for n in range(1, s):
            m = s - n
            lhs, rhs = gi.semi_orthogonality_exact(n, m)
            out.append(Record.exact(f"double-sum n={n} m={m}", lhs, rhs, "semi-orth-sum"))
            try:
                q = gi.semi_orthogonality_quad(n, m)
                out.append(Record.numeric(f"integral n={n} m={m}", q.value, float(rhs),
                                          tol, 1e-12, "semi-orth-integral"))
            except ExpolyError as exc:
                out.append(Record(f"integral n={n} m={m}", f"error: {exc}", render_value(rhs),
                                  passed=False, paper_eq="semi-orth-integral"))
    for m in range(max_sum):
        lhs, rhs = gi.semi_orthogonality_single(m)
        out.append(Record.exact(f"single-sum m={m}", lhs, rhs, "stirling-bernoulli"))
    for p in range(1, min(8, max_sum // 2) + 1):
        q = gi.sinh_integral_check(p)
        out.append(Record.numeric(f"sinh p={p}", q.value, float(gi.sinh_integral_closed(p)),
                                  tol, 0.0, "sinh-integral"))
    return out


def gamma_suite(n: int = 6, tolerance: float | None = None, **_) -> list[Record]:
    """Quadrature against closed forms for both Gamma moment families."""
    tol = 1e-8 if tolerance is None else tolerance
    out: list[Record] = []
    for k in range(n + 1):
        for a in GAMMA_PARAMS:
            for lam in SHIFTS:
                c = gi.moment_single_closed(k, a, lam).float_value
                q = gi.moment_single_quad(k, a, lam).value
                out.append(Record.numeric(f"single n={k} a={a} lam={lam}", q, c, tol, 1e-10,
                                          "gamma-single"))
            for b in GAMMA_PARAMS:
                for mu in SHIFTS:
                    c = gi.moment_pair_closed(k, a, b, mu).float_value
                    q = gi.moment_pair_quad(k, a, b, mu).value
                    out.append(Record.numeric(f"pair n={k} a={a} b={b} mu={mu}", q, c, tol, 1e-10,
                                              "gamma-pair"))
        c = gi.moment_single_closed(k, 1.0, 0.0).float_value
        out.append(Record.numeric(f"moment at a=1 n={k}", gi.moment_at_one(k), c, 1e-12, 1e-12,
                                  "gamma-at-one"))
    for b in GAMMA_PARAMS:
        closed = 2 * math.pi * math.gamma(0.5 + b) / 2 ** (0.5 + b)
        out.append(Record.numeric(f"known pair integral a=0.5 b={b}",
                                  gi.moment_pair_closed(0, 0.5, b, 0.0).float_value, closed,
                                  1e-13, 0.0, "gamma-pair-n0"))
    return out


SUITES = {
    "poly": poly_suite,
    "mellin": mellin_suite,
    "semi-orth": semi_orth_suite,
    "gamma": gamma_suite,
}
