"""Reference tables of the first six Nörlund polynomials and higher Faulhaber polynomials.

The reference expressions are stored in their typeset, factored form, as
functions of the order ``k`` (and ``n`` for the power-sum polynomials). The
tabulated
``B_4^(k)`` omits an overall factor ``k``; the value it gives at ``k = 2``
is ``1/20`` while the generating function gives ``1/10``. Comparisons
against it are therefore made after multiplying by ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable

from . import bernoulli as bern
from . import powersums
from .exactnum import Polynomial, interpolate


def _n4(k):
    return F(1, 240) * (15 * k**3 - 30 * k**2 + 5 * k + 2)


TABULATED_NORLUND: dict[int, Callable[[F], F]] = {
    0: lambda k: F(1),
    1: lambda k: -F(1, 2) * k,
    2: lambda k: F(1, 12) * k * (3 * k - 1),
    3: lambda k: -F(1, 8) * k**2 * (k - 1),
    4: _n4,
    5: lambda k: -F(1, 96) * k**2 * (k - 1) * (3 * k**2 - 7 * k - 2),
}

# correction factor applied to the tabulated entry before comparison
NORLUND_CORRECTION: dict[int, Callable[[F], F]] = {4: lambda k: k}


def _s4(k, n):
    inner = ((15 * k**3 + 30 * k**2 + 5 * k - 2) * n**3
             + (45 * k**3 + 30 * k**2 - 5 * k + 2) * n**2
             + (45 * k**3 - 30 * k**2 - 5 * k - 2) * n
             + 15 * k**3 - 30 * k**2 + 5 * k + 2)
    return F(k, 240) * n**k * (n + 1) * inner


def _s5(k, n):
    inner = ((3 * k**3 + 10 * k**2 + 5 * k - 2) * n**3
             + (9 * k**3 + 10 * k**2 - 5 * k + 2) * n**2
             + (9 * k**3 - 10 * k**2 - 5 * k - 2) * n
             + 3 * k**3 - 10 * k**2 + 5 * k + 2)
    return F(k**2, 96) * n**k * (n + 1) ** 2 * inner


TABULATED_FAULHABER: dict[int, Callable[[int, F], F]] = {
    0: lambda k, n: F(n) ** k,
    1: lambda k, n: F(k, 2) * F(n) ** k * (n + 1),
    2: lambda k, n: F(k, 12) * F(n) ** k * (n + 1) * ((3 * k + 1) * n + 3 * k - 1),
    3: lambda k, n: F(k**2, 8) * F(n) ** k * (n + 1) ** 2 * ((k + 1) * n + k - 1),
    4: _s4,
    5: _s5,
}


def tabulated_norlund_polynomial(m: int, corrected: bool = False) -> Polynomial:
    """Interpolate the tabulated entry back to a polynomial in k."""
    f = TABULATED_NORLUND[m]
    fix = NORLUND_CORRECTION.get(m) if corrected else None
    # degree <= m + 1, so m + 2 nodes are plenty
    pts = []
    for k in range(m + 2):
        v = f(F(k))
        if fix is not None:
            v *= fix(F(k))
        pts.append((k, v))
    return interpolate("k", pts)


def tabulated_faulhaber_polynomial(m: int, k: int) -> Polynomial:
    return interpolate("n", [(n, TABULATED_FAULHABER[m](k, F(n))) for n in range(m + k + 1)])


@dataclass(frozen=True)
class NorlundRow:
    m: int
    computed: Polynomial
    tabulated: Polynomial
    matches: bool
    matches_after_correction: bool
    note: str


@dataclass(frozen=True)
class FaulhaberRow:
    m: int
    k: int
    computed: Polynomial
    matches: bool


def norlund_table(upto: int = 5) -> list[NorlundRow]:
    rows = []
    for m in range(upto + 1):
        computed = bern.norlund_polynomial(m)
        tabulated = tabulated_norlund_polynomial(m)
        matches = computed == tabulated
        corrected = computed == tabulated_norlund_polynomial(m, corrected=True)
        note = ""
        if not matches and corrected and m in NORLUND_CORRECTION:
            note = (f"tabulated entry lacks an overall factor k; "
                    f"at k=2 it gives {TABULATED_NORLUND[m](F(2))}, "
                    f"the series gives {bern.higher_bernoulli(m, 2)}")
        rows.append(NorlundRow(m, computed, tabulated, matches, corrected, note))
    return rows


def faulhaber_table(upto: int = 5, k_max: int = 6) -> list[FaulhaberRow]:
    rows = []
    for m in range(upto + 1):
        for k in range(1, k_max + 1):
            computed = powersums.higher_faulhaber_poly(m, k)
            rows.append(FaulhaberRow(m, k, computed, computed == tabulated_faulhaber_polynomial(m, k)))
    return rows
