"""Classical and higher-order Bernoulli numbers, Nörlund and Stirling polynomials.

Higher-order values ``B_m^(k)`` (coefficients of ``(t/(e^t - 1))**k``) are
available through three independent routes:

``triangular``
    solve ``sum_q C(m+k, q) S(m+k-q, k) B_q^(k) = [m == 0]`` for the top term.
``norlund_recurrence``
    step the order with ``B_m^(k+1) = (k-m)/k B_m^(k) - m B_{m-1}^(k)``
    starting from the classical numbers.
``convolution``
    raise the power series of ``t/(e^t - 1)`` to the k-th power and read
    off ``m! [t^m]``. This is the reference route; the other two are
    checked against it.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from . import combinatorics
from .exactnum import Polynomial, interpolate, poly_substitute_negated

PATHS = ("triangular", "norlund_recurrence", "convolution")


class BernoulliFamily:
    """Memoized Bernoulli data; grows on demand under a lock."""

    def __init__(self, tables: combinatorics.CombinatorialTables | None = None) -> None:
        self._tables = tables
        self._lock = threading.RLock()
        self.classical: list[Fraction] = []
        self.triangular: dict[int, list[Fraction]] = {}
        self.norlund_rows: dict[int, list[Fraction]] = {}
        self.series_powers: dict[int, list[Fraction]] = {}
        self.norlund_polys: dict[int, Polynomial] = {}
        self.stirling_polys: dict[int, Polynomial] = {}

    @property
    def tables(self) -> combinatorics.CombinatorialTables:
        # late-bound so a replaced global table is picked up
        return self._tables if self._tables is not None else combinatorics.TABLES

    # classical numbers

    def bernoulli(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("Bernoulli index must be nonnegative")
        if m >= len(self.classical):
            with self._lock:
                C = self.tables.binomial
                B = self.classical
                for j in range(len(B), m + 1):
                    if j == 0:
                        B.append(Fraction(1))
                        continue
                    acc = sum((C(j + 1, q) * B[q] for q in range(j)), Fraction(0))
                    B.append(-acc / (j + 1))
        return self.classical[m]

    # higher order

    def _triangular(self, m: int, k: int) -> Fraction:
        with self._lock:
            row = self.triangular.setdefault(k, [])
            C, S = self.tables.binomial, self.tables.stirling2
            for j in range(len(row), m + 1):
                acc = sum((C(j + k, q) * S(j + k - q, k) * row[q] for q in range(j)), Fraction(0))
                rhs = 1 if j == 0 else 0
                # top term: C(j+k, j) S(k, k) = C(j+k, j)
                row.append((rhs - acc) / C(j + k, j))
            return row[m]

    def _norlund(self, m: int, k: int) -> Fraction:
        if k < 1:
            raise ValueError("the Nörlund order recurrence divides by k and needs k >= 1")
        with self._lock:
            rows = self.norlund_rows
            if 1 not in rows or len(rows[1]) <= m:
                rows[1] = [self.bernoulli(j) for j in range(m + 1)]
            for order in range(2, k + 1):
                prev = rows[order - 1]
                cur = rows.get(order, [])
                if len(cur) > m:
                    continue
                base = order - 1
                cur = [
                    Fraction(base - j, base) * prev[j] - (j * prev[j - 1] if j else 0)
                    for j in range(m + 1)
                ]
                rows[order] = cur
            return rows[k][m]

    def _reference_series(self, length: int) -> list[Fraction]:
        """Coefficients of t/(e^t - 1) by inverting sum_j t^j/(j+1)!."""
        a = [Fraction(1, factorial(j + 1)) for j in range(length)]
        b = [Fraction(1)]
        for j in range(1, length):
            b.append(-sum((a[i] * b[j - i] for i in range(1, j + 1)), Fraction(0)))
        return b

    def _convolution(self, m: int, k: int) -> Fraction:
        if k < 0:
            raise ValueError("order must be nonnegative")
        length = m + 1
        with self._lock:
            cached = self.series_powers.get(k)
            if cached is None or len(cached) < length:
                length = max(length, len(cached or ()))
                base = self._reference_series(length)
                power = [Fraction(1)] + [Fraction(0)] * (length - 1)
                for _ in range(k):
                    power = [
                        sum((power[i] * base[j - i] for i in range(j + 1)), Fraction(0))
                        for j in range(length)
                    ]
                self.series_powers[k] = power
            return self.series_powers[k][m] * factorial(m)

    def higher_bernoulli(self, m: int, k: int, path: str = "convolution") -> Fraction:
        if m < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if path == "triangular":
            return self._triangular(m, k)
        if path == "norlund_recurrence":
            return self._norlund(m, k)
        if path == "convolution":
            return self._convolution(m, k)
        raise ValueError(f"unknown path {path!r}; expected one of {PATHS}")

    # polynomial families

    def norlund_polynomial(self, m: int) -> Polynomial:
        p = self.norlund_polys.get(m)
        if p is None:
            p = interpolate("k", [(k, self.higher_bernoulli(m, k)) for k in range(m + 1)])
            self.norlund_polys[m] = p
        return p

    def stirling_polynomial(self, m: int) -> Polynomial:
        p = self.stirling_polys.get(m)
        if p is None:
            p = combinatorics.binomial_poly(m) * poly_substitute_negated(self.norlund_polynomial(m))
            self.stirling_polys[m] = p
        return p

    def bernoulli_via_stirling(self, m: int, k: int) -> Fraction:
        """Sum over q of s(q+k, k) / C(q+k, k) * S(m, q); the empty sum at m = 0 is 1."""
        if k < 1:
            raise ValueError("order must be positive")
        if m == 0:
            return Fraction(1)
        t = self.tables
        return sum(
            (
                Fraction(t.stirling1_signed(q + k, k), t.binomial(q + k, k)) * t.stirling2(m, q)
                for q in range(1, m + 1)
            ),
            Fraction(0),
        )


FAMILY = BernoulliFamily()


def bernoulli(m: int) -> Fraction:
    return FAMILY.bernoulli(m)


def higher_bernoulli(m: int, k: int, path: str = "convolution") -> Fraction:
    return FAMILY.higher_bernoulli(m, k, path)


def norlund_polynomial(m: int) -> Polynomial:
    return FAMILY.norlund_polynomial(m)


def stirling_polynomial(m: int) -> Polynomial:
    return FAMILY.stirling_polynomial(m)


def bernoulli_via_stirling(m: int, k: int) -> Fraction:
    return FAMILY.bernoulli_via_stirling(m, k)
