"""Memoized binomials, Stirling numbers, harmonic numbers and extended binomial rows.

Extended binomial rows use the 0-based convention: row ``(k, n)`` holds the
coefficients of ``t**q`` in ``(1 + t + ... + t**(n-1))**k`` for
``q = 0 .. k*(n-1)``. The coefficient attached to ``e**(q*t)`` in the
k-th power of ``sum_{j=1..n} e**(j*t)`` is therefore row element ``q - k``.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from .exactnum import Polynomial


class CombinatorialTables:
    """Triangles that grow on demand and are never evicted.

    Growth happens under a lock; entries, once written, are never changed,
    so readers may share a table freely.
    """

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self.binomial_table: dict[tuple[int, int], int] = {}
        self.stirling2_table: dict[tuple[int, int], int] = {}
        self.stirling1_table: dict[tuple[int, int], int] = {}
        self.extended_rows: dict[tuple[int, int], tuple[int, ...]] = {}
        self._binomial_rows = 0
        self._stirling2_rows = 0
        self._stirling1_rows = 0

    # binomials

    def _grow_binomial(self, n: int) -> None:
        with self._lock:
            for a in range(self._binomial_rows, n + 1):
                for b in range(a + 1):
                    if b == 0 or b == a:
                        v = 1
                    else:
                        v = self.binomial_table[a - 1, b - 1] + self.binomial_table[a - 1, b]
                    self.binomial_table[a, b] = v
            self._binomial_rows = max(self._binomial_rows, n + 1)

    def binomial(self, n: int, q: int) -> int:
        if n < 0:
            raise ValueError(f"binomial top index must be nonnegative, got {n}")
        if q < 0 or q > n:
            return 0
        if n >= self._binomial_rows:
            self._grow_binomial(n)
        return self.binomial_table[n, q]

    # Stirling numbers

    def _grow_stirling2(self, n: int) -> None:
        with self._lock:
            t = self.stirling2_table
            for a in range(self._stirling2_rows, n + 1):
                for b in range(a + 1):
                    if a == 0:
                        v = 1
                    elif b == 0:
                        v = 0
                    else:
                        v = t.get((a - 1, b - 1), 0) + b * t.get((a - 1, b), 0)
                    t[a, b] = v
            self._stirling2_rows = max(self._stirling2_rows, n + 1)

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be nonnegative")
        if k > n:
            return 0
        if n >= self._stirling2_rows:
            self._grow_stirling2(n)
        return self.stirling2_table[n, k]

    def _grow_stirling1(self, n: int) -> None:
        with self._lock:
            t = self.stirling1_table
            for a in range(self._stirling1_rows, n + 1):
                for b in range(a + 1):
                    if a == 0:
                        v = 1
                    elif b == 0:
                        v = 0
                    else:
                        v = t.get((a - 1, b - 1), 0) - (a - 1) * t.get((a - 1, b), 0)
                    t[a, b] = v
            self._stirling1_rows = max(self._stirling1_rows, n + 1)

    def stirling1_signed(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be nonnegative")
        if k > n:
            return 0
        if n >= self._stirling1_rows:
            self._grow_stirling1(n)
        return self.stirling1_table[n, k]

    # extended binomial rows

    def extended_binomial_row(self, k: int, n: int) -> tuple[int, ...]:
        if n < 1:
            raise ValueError(f"extended binomial rows need n >= 1, got {n}")
        if k < 0:
            raise ValueError(f"extended binomial rows need k >= 0, got {k}")
        row = self.extended_rows.get((k, n))
        if row is not None:
            return row
        with self._lock:
            # build from the largest cached lower power
            start = max((j for j in range(k + 1) if (j, n) in self.extended_rows), default=None)
            if start is None:
                start, cur = 0, [1]
                self.extended_rows[0, n] = (1,)
            else:
                cur = list(self.extended_rows[start, n])
            for j in range(start + 1, k + 1):
                nxt = [0] * (len(cur) + n - 1)
                for i, c in enumerate(cur):
                    for d in range(n):
                        nxt[i + d] += c
                cur = nxt
                self.extended_rows[j, n] = tuple(cur)
            return self.extended_rows[k, n]


TABLES = CombinatorialTables()


def binomial(n: int, q: int) -> int:
    return TABLES.binomial(n, q)


def stirling2(n: int, k: int) -> int:
    return TABLES.stirling2(n, k)


def stirling1_signed(n: int, k: int) -> int:
    return TABLES.stirling1_signed(n, k)


def extended_binomial_row(k: int, n: int) -> tuple[int, ...]:
    return TABLES.extended_binomial_row(k, n)


def binomial_poly(m: int) -> Polynomial:
    """C(m + k, m) as a polynomial in k, i.e. (k+1)(k+2)...(k+m)/m!."""
    if m < 0:
        raise ValueError("binomial_poly needs m >= 0")
    p = Polynomial.from_roots("k", range(-1, -m - 1, -1))
    fact = 1
    for j in range(2, m + 1):
        fact *= j
    return p.scale(Fraction(1, fact))


def harmonic(m: int) -> Fraction:
    if m < 1:
        raise ValueError(f"harmonic numbers need m >= 1, got {m}")
    return sum((Fraction(1, q) for q in range(1, m + 1)), Fraction(0))
