"""Signed sums over nondecreasing tuples and the related-sums residual.

For a tuple ``1 <= l_1 <= ... <= l_k <= k*n`` the shifted components are
``v_j = l_j - (j - 1)*n``. Each component contributes ``sign(v_j) |v_j|**m``
to the script sum; collecting these by ``|v_j|`` gives integer coefficients
``c_q(k, n)`` with ``script_sum = sum_q c_q q**m``. Zero components count
``+1`` toward ``c_0`` so that the ``m = 0`` sum counts them too.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from . import combinatorics as comb
from .powersums import higher_power_sum

BUDGET_ENV = "HIGHER_SUMS_BUDGET"
DEFAULT_BUDGET = 10**7


class BudgetExceeded(ValueError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be >= 1, got {value}")
    return value


def tuple_count(k: int, n: int) -> int:
    return comb.binomial(k * n + k - 1, k)


def _check(k: int, n: int, budget: int | None) -> None:
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    budget = default_budget() if budget is None else budget
    count = tuple_count(k, n)
    if count > budget:
        raise BudgetExceeded(
            f"enumerating k={k}, n={n} needs {count} tuples, over the budget of {budget}"
        )


def enumerate_multisets(k: int, n: int, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Lexicographic stream of nondecreasing k-tuples with entries in [1, k*n]."""
    _check(k, n, budget)
    return combinations_with_replacement(range(1, k * n + 1), k)


@lru_cache(maxsize=None)
def _coefficients(k: int, n: int) -> tuple[int, ...]:
    c = [0] * (k * n + 1)
    for lam in combinations_with_replacement(range(1, k * n + 1), k):
        for j, value in enumerate(lam):
            v = value - j * n
            if v < 0:
                c[-v] -= 1
            else:
                c[v] += 1
    return tuple(c)


def signed_coefficients(k: int, n: int, budget: int | None = None) -> tuple[int, ...]:
    """c_q(k, n) for q = 0 .. k*n."""
    _check(k, n, budget)
    return _coefficients(k, n)


def script_sum(m: int, k: int, n: int, budget: int | None = None) -> int:
    if m < 0:
        raise ValueError("m must be nonnegative")
    c = signed_coefficients(k, n, budget)
    return sum(cq * q**m for q, cq in enumerate(c))


def script_sum_direct(m: int, k: int, n: int, budget: int | None = None) -> int:
    """Tuple-by-tuple evaluation of the signed power sum; meaningful for odd m."""
    total = 0
    for lam in enumerate_multisets(k, n, budget):
        total += sum((value - j * n) ** m for j, value in enumerate(lam))
    return total


def related_sums(m: int, k: int, n: int) -> int:
    """sum_{q=0..k-1} C(k(n+1), q) S_m^(k-q)(n)."""
    return sum(
        comb.binomial(k * (n + 1), q) * higher_power_sum(m, k - q, n) for q in range(k)
    )


def conjecture_residual(m: int, k: int, n: int, budget: int | None = None) -> int:
    return script_sum(m, k, n, budget) - related_sums(m, k, n)


def expected_residual(m: int, k: int, n: int, budget: int | None = None) -> int:
    return signed_coefficients(k, n, budget)[0] if m == 0 else 0


def conjecture_row(m: int, k: int, n: int, budget: int | None = None) -> dict:
    lhs = script_sum(m, k, n, budget)
    rhs = related_sums(m, k, n)
    expected = expected_residual(m, k, n, budget)
    return {
        "m": m,
        "k": k,
        "n": n,
        "script_sum": lhs,
        "related_sum": rhs,
        "residual": lhs - rhs,
        "expected_residual": expected,
        "holds": lhs - rhs == expected,
    }
