"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Exact = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def to_fraction(value: object) -> Fraction:
    """Convert ints, Fractions, floats (exactly) or ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def format_exact(value: Exact) -> str:
    """Render an exact value as ``"4140"`` or ``"-1/30"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_terms(coeffs: Sequence[Exact], var: str = "x") -> str:
    """Highest degree first, e.g. ``1·x⁴ + 6·x³ + 7·x² + 1·x``."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        mag = format_exact(abs(c))
        if k == 0:
            term = mag
        elif k == 1:
            term = f"{mag}·{var}"
        else:
            term = f"{mag}·{var}{str(k).translate(_SUPERSCRIPTS)}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


class RationalPolynomial:
    """Immutable polynomial ``sum_k coeffs[k] x**k`` over the rationals.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and ``degree == -1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[object] = ()) -> None:
        c = [to_fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: object = 1) -> "RationalPolynomial":
        return cls([0] * k + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPolynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(format_exact(c) for c in self._c)}])"

    def __str__(self) -> str:
        return format_terms(self._c)

    @staticmethod
    def _coerce(other: object) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        return RationalPolynomial([other])

    def __add__(self, other: object) -> "RationalPolynomial":
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return RationalPolynomial(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other: object) -> "RationalPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "RationalPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            s = to_fraction(other)
            return RationalPolynomial(s * c for c in self._c)
        a, b = self._c, other._c
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RationalPolynomial":
        out = RationalPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; exact when ``x`` is int or Fraction."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "RationalPolynomial":
        """Multiply by ``x**k``."""
        if not self._c:
            return self
        return RationalPolynomial([0] * k + list(self._c))

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(k * c for k, c in enumerate(self._c) if k)

    def antiderivative(self) -> "RationalPolynomial":
        """Antiderivative vanishing at 0."""
        return RationalPolynomial([0] + [c / (k + 1) for k, c in enumerate(self._c)])

    def scale(self, a: object) -> "RationalPolynomial":
        """The polynomial ``x -> p(a x)``."""
        a = to_fraction(a)
        return RationalPolynomial(c * a**k for k, c in enumerate(self._c))

    def substitute_monomial(self, a: object, p: int) -> "RationalPolynomial":
        """The polynomial ``x -> p(a x**p)``."""
        a = to_fraction(a)
        out = [Fraction(0)] * (p * self.degree + 1 if self._c else 0)
        for k, c in enumerate(self._c):
            out[p * k] += c * a**k
        return RationalPolynomial(out)

    def divide_by_x(self) -> "RationalPolynomial":
        if self._c and self._c[0] != 0:
            raise ValueError("polynomial has a nonzero constant term")
        return RationalPolynomial(self._c[1:])
