from fractions import Fraction as F
from itertools import product

import pytest

from higher_sums import appendix
from higher_sums.exactnum import Polynomial
from higher_sums.powersums import (
    PowerSumQuery,
    faulhaber_poly,
    higher_faulhaber_poly,
    higher_power_sum,
    power_sum,
    theorem_check,
)


def tuple_power_sum(m, k, n):
    """Expand (sum_{q=1..n} e^{qt})^k directly: sum over [1, n]^k of (q_1 + ... + q_k)^m."""
    return sum(sum(qs) ** m for qs in product(range(1, n + 1), repeat=k))


def test_power_sum_examples():
    assert all(power_sum(0, n) == n for n in range(1, 10))
    assert power_sum(2, 3) == 14
    assert power_sum(3, 4) == 100


def test_faulhaber_examples():
    assert faulhaber_poly(0) == Polynomial("n", (0, 1))
    assert faulhaber_poly(1) == Polynomial("n", (0, F(1, 2), F(1, 2)))
    assert faulhaber_poly(2)(3) == 14


def test_faulhaber_matches_power_sums():
    for m in range(13):
        p = faulhaber_poly(m)
        assert all(p(n) == power_sum(m, n) for n in range(1, 11))


def test_higher_power_sum_examples():
    assert higher_power_sum(0, 3, 2) == 8
    assert higher_power_sum(1, 2, 3) == 36
    assert higher_power_sum(1, 1, 5) == 15


def test_higher_power_sum_against_tuple_oracle():
    for k in range(1, 4):
        for n in range(1, 5):
            for m in range(6):
                assert higher_power_sum(m, k, n) == tuple_power_sum(m, k, n)


def test_zeroth_sum_is_power_of_n():
    assert all(higher_power_sum(0, k, n) == n**k for k in range(1, 7) for n in range(1, 7))


def test_higher_faulhaber_examples():
    assert higher_faulhaber_poly(0, 4) == Polynomial.monomial("n", 4)
    assert higher_faulhaber_poly(1, 2) == Polynomial("n", (0, 0, 1, 1))
    assert higher_faulhaber_poly(2, 1) == Polynomial("n", (0, F(1, 6), F(1, 2), F(1, 3)))


def test_order_one_reduces_to_faulhaber():
    assert all(higher_faulhaber_poly(m, 1) == faulhaber_poly(m) for m in range(13))


def test_divisible_by_n_to_the_k():
    for m in range(9):
        for k in range(1, 6):
            p = higher_faulhaber_poly(m, k)
            assert all(p.coeff(j) == 0 for j in range(k))
            # the n^k coefficient is a multiple of B_m^(k), which vanishes for k=1, odd m >= 3
            assert p.low_order() == k or (k == 1 and m % 2 and m >= 3)


def test_vanishes_at_minus_one():
    assert all(higher_faulhaber_poly(m, k)(-1) == 0 for m in range(1, 9) for k in range(1, 6))


def test_bernoulli_path_does_not_matter():
    for path in ("triangular", "norlund_recurrence"):
        assert higher_faulhaber_poly(6, 3, path) == higher_faulhaber_poly(6, 3)


@pytest.mark.parametrize("m, k, n, value", [(1, 2, 3, 36), (0, 5, 4, 1024)])
def test_theorem_check_examples(m, k, n, value):
    r = theorem_check(PowerSumQuery(m, k, n))
    assert r.holds and r.lhs == r.rhs == value


def test_theorem_check_against_tabulated_form():
    r = theorem_check(PowerSumQuery(4, 2, 2))
    assert r.holds
    assert appendix.TABULATED_FAULHABER[4](2, F(2)) == r.lhs == tuple_power_sum(4, 2, 2)


def test_query_validation():
    with pytest.raises(ValueError):
        PowerSumQuery(0, 0, 1)
    with pytest.raises(ValueError):
        PowerSumQuery(0, 1, 0)
    with pytest.warns(RuntimeWarning):
        PowerSumQuery(17, 1, 1)
