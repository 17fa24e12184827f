"""Exact combinatorial numbers: binomials, Stirling numbers, Bernoulli and Bell numbers.

All values are Python ints or :class:`fractions.Fraction`, so nothing overflows
and rationals are always held in lowest terms with a positive denominator.

Triangular tables are memoized in lazily grown caches.  A cache only ever
appends complete rows while holding its lock, so concurrent readers never see
a partially filled row.

Signed Stirling numbers of the first kind are not exposed separately; they are
``(-1)**(n - k) * stirling1_unsigned(n, k)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "StirlingCache",
    "BernoulliCache",
    "binomial",
    "stirling2",
    "stirling2_row",
    "stirling2_explicit",
    "stirling1_unsigned",
    "stirling1_row",
    "bernoulli",
    "bernoulli_recurrence",
    "bell",
]


def _check_nonneg(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


class StirlingCache:
    """Triangular table of Stirling numbers, extended one row at a time.

    ``kind`` is ``"second"`` for set partitions or ``"first-unsigned"`` for
    permutation cycles.  Row ``n`` holds exactly ``n + 1`` entries.
    """

    def __init__(self, kind: str) -> None:
        if kind not in ("second", "first-unsigned"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _next_row(self, prev: tuple[int, ...]) -> tuple[int, ...]:
        n = len(prev)  # index of the row being built
        row = [0] * (n + 1)
        if self.kind == "second":
            # {n k} = k {n-1 k} + {n-1 k-1}
            for k in range(1, n + 1):
                row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
        else:
            # [n k] = (n-1) [n-1 k] + [n-1 k-1]
            for k in range(1, n + 1):
                row[k] = ((n - 1) * prev[k] if k < n else 0) + prev[k - 1]
        return tuple(row)

    def row(self, n: int) -> tuple[int, ...]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                self._rows.append(self._next_row(self._rows[-1]))
            return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if k > n:
            return 0
        return self.row(n)[k]


class BernoulliCache:
    """Bernoulli numbers ``B_0, B_1, ...`` with ``B_1 = -1/2``.

    Each new value comes from the Stirling-number sum

        B_{m+1} = (m+1)/(2^{m+1}-1) * sum_j (-1)^{j+1} {m j} j!/2^{j+1},

    so only the second-kind Stirling row ``m`` is needed, never the earlier
    Bernoulli numbers.
    """

    def __init__(self, stirling: StirlingCache) -> None:
        self._stirling = stirling
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def _compute(self, n: int) -> Fraction:
        m = n - 1
        row = self._stirling.row(m)
        total = Fraction(0)
        for j, s in enumerate(row):
            if s:
                sign = 1 if j % 2 else -1
                total += Fraction(sign * s * factorial(j), 2 ** (j + 1))
        return total * Fraction(n, 2**n - 1)

    def __call__(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._compute(len(self._values)))
            return self._values[n]


_STIRLING2 = StirlingCache("second")
_STIRLING1 = StirlingCache("first-unsigned")
_BERNOULLI = BernoulliCache(_STIRLING2)
_BELL: list[int] = []
_BELL_LOCK = threading.Lock()


def binomial(n: int, k: int) -> int:
    _check_nonneg(n=n, k=k)
    return comb(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind from the triangular recurrence."""
    _check_nonneg(n=n, k=k)
    return _STIRLING2(n, k)


def stirling2_row(n: int) -> tuple[int, ...]:
    _check_nonneg(n=n)
    return _STIRLING2.row(n)


def stirling2_explicit(n: int, k: int) -> int:
    """Stirling number of the second kind from the alternating binomial sum.

    The sum is divided by ``k!`` exactly; a nonzero remainder can only come
    from a bug and raises ``ArithmeticError``.
    """
    _check_nonneg(n=n, k=k)
    total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1))
    q, r = divmod(total, factorial(k))
    if r:
        raise ArithmeticError(f"alternating sum for ({n}, {k}) not divisible by {k}!")
    return q


def stirling1_unsigned(n: int, k: int) -> int:
    _check_nonneg(n=n, k=k)
    return _STIRLING1(n, k)


def stirling1_row(n: int) -> tuple[int, ...]:
    _check_nonneg(n=n)
    return _STIRLING1.row(n)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number ``B_n`` (``B_1 = -1/2``)."""
    _check_nonneg(n=n)
    return _BERNOULLI(n)


def bernoulli_recurrence(n: int) -> list[Fraction]:
    """``B_0..B_n`` from ``sum_{k<=m} C(m+1, k) B_k = 0``.

    Independent of the Stirling route; used for cross-validation.
    """
    _check_nonneg(n=n)
    out = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, k) * out[k] for k in range(m))
        out.append(-s / (m + 1))
    return out


def bell(n: int) -> int:
    """Bell number: the sum of row ``n`` of the second-kind Stirling triangle."""
    _check_nonneg(n=n)
    if n < len(_BELL):
        return _BELL[n]
    with _BELL_LOCK:
        while len(_BELL) <= n:
            _BELL.append(sum(_STIRLING2.row(len(_BELL))))
        return _BELL[n]
