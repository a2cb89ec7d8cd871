"""Power sums of integers and their higher-order analogues.

Brute-force sums are computed literally from their definitions and
compared against the closed-form polynomials in ``n``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import bernoulli as bern
from . import combinatorics as comb
from .exactnum import Polynomial, poly_eval
from .report import IdentityReport

DEFAULT_BOUNDS = {"m": 16, "k": 8, "n": 50}


@dataclass(frozen=True)
class PowerSumQuery:
    m: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        over = [f"{name}={getattr(self, name)}" for name, cap in DEFAULT_BOUNDS.items()
                if getattr(self, name) > cap]
        if over:
            warnings.warn(
                f"query beyond desk-scale bounds ({', '.join(over)}); this may be slow",
                RuntimeWarning,
                stacklevel=2,
            )


def _ipow(base: int, e: int) -> int:
    # 0**0 == 1 by convention, which Python already does
    return base ** e


def power_sum(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("power_sum needs m >= 0 and n >= 0")
    return sum(_ipow(q, m) for q in range(1, n + 1))


def faulhaber_poly(m: int) -> Polynomial:
    """1/(m+1) * sum_q (-1)^q C(m+1, q) B_q n^(m+1-q)."""
    coeffs = [Fraction(0)] * (m + 2)
    for q in range(m + 1):
        coeffs[m + 1 - q] = (-1) ** q * comb.binomial(m + 1, q) * bern.bernoulli(q) / (m + 1)
    return Polynomial("n", coeffs)


def higher_power_sum(m: int, k: int, n: int) -> int:
    """sum_q row[q] * (k + q)^m over the 0-based extended binomial row."""
    if k < 1 or n < 1:
        raise ValueError("higher_power_sum needs k >= 1 and n >= 1")
    row = comb.extended_binomial_row(k, n)
    return sum(c * _ipow(k + q, m) for q, c in enumerate(row))


def higher_faulhaber_poly(m: int, k: int, path: str = "convolution") -> Polynomial:
    if m < 0 or k < 1:
        raise ValueError("higher_faulhaber_poly needs m >= 0 and k >= 1")
    norm = comb.binomial(m + k, k)
    coeffs = [Fraction(0)] * (m + k + 1)
    for q in range(m + 1):
        coeffs[m + k - q] = Fraction(
            (-1) ** q * comb.binomial(m + k, q) * comb.stirling2(m + k - q, k), norm
        ) * bern.higher_bernoulli(q, k, path)
    return Polynomial("n", coeffs)


def theorem_check(query: PowerSumQuery) -> IdentityReport:
    lhs = Fraction(higher_power_sum(query.m, query.k, query.n))
    rhs = poly_eval(higher_faulhaber_poly(query.m, query.k), query.n)
    return IdentityReport.build(
        "theorem", {"m": query.m, "k": query.k, "n": query.n}, lhs, rhs
    )
