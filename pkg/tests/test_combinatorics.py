from fractions import Fraction
from itertools import permutations, product

import pytest

from higher_sums.combinatorics import (
    CombinatorialTables,
    binomial,
    binomial_poly,
    extended_binomial_row,
    harmonic,
    stirling1_signed,
    stirling2,
)


def set_partitions(n):
    """All partitions of range(n) as lists of blocks."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n - 1]] + part[i + 1:]
        yield part + [[n - 1]]


def cycle_count(perm):
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start not in seen:
            cycles += 1
            j = start
            while j not in seen:
                seen.add(j)
                j = perm[j]
    return cycles


def test_binomial_examples():
    assert binomial(7, 0) == 1
    assert binomial(5, 2) == 10
    assert binomial(6, 1) == 6
    assert binomial(4, -1) == 0
    assert binomial(4, 5) == 0


def test_binomial_symmetry_and_pascal():
    for n in range(31):
        for q in range(n + 1):
            assert binomial(n, q) == binomial(n, n - q)
            if n and 0 < q < n:
                assert binomial(n, q) == binomial(n - 1, q - 1) + binomial(n - 1, q)


def test_binomial_rejects_negative_top():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_poly():
    assert binomial_poly(0).coeffs == (1,)
    assert binomial_poly(1).coeffs == (1, 1)
    assert binomial_poly(2)(3) == 10
    for m in range(8):
        assert binomial_poly(m).degree == m
        for k in range(11):
            assert binomial_poly(m)(k) == binomial(m + k, m)


def test_stirling2_examples():
    assert all(stirling2(n, n) == 1 for n in range(10))
    assert stirling2(4, 2) == 7
    assert stirling2(5, 2) == 15
    assert stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(2, 5) == 0


def test_stirling2_against_partition_enumeration():
    for n in range(8):
        counts = {}
        for part in set_partitions(n):
            counts[len(part)] = counts.get(len(part), 0) + 1
        for k in range(n + 1):
            assert stirling2(n, k) == counts.get(k, 0)


def test_stirling1_examples():
    assert all(stirling1_signed(n, n) == 1 for n in range(10))
    assert stirling1_signed(3, 1) == 2
    assert stirling1_signed(4, 2) == 11
    assert stirling1_signed(4, 1) == -6


def test_stirling1_against_cycle_enumeration():
    for n in range(7):
        counts = {}
        for perm in permutations(range(n)):
            c = cycle_count(perm)
            counts[c] = counts.get(c, 0) + 1
        for k in range(n + 1):
            assert stirling1_signed(n, k) == (-1) ** (n - k) * counts.get(k, 0)


def test_stirling_orthogonality():
    for n in range(13):
        for k in range(13):
            total = sum(stirling1_signed(n, j) * stirling2(j, k) for j in range(max(n, k) + 1))
            assert total == (1 if n == k else 0)


def test_stirling2_nonnegative():
    assert all(stirling2(n, k) >= 0 for n in range(15) for k in range(15))


def test_harmonic():
    assert harmonic(1) == 1
    assert harmonic(2) == Fraction(3, 2)
    assert harmonic(3) == Fraction(11, 6)
    with pytest.raises(ValueError):
        harmonic(0)


def test_extended_rows_examples():
    assert extended_binomial_row(2, 2) == (1, 2, 1)
    assert extended_binomial_row(2, 3) == (1, 2, 3, 2, 1)
    assert sum(extended_binomial_row(2, 3)) == 9
    with pytest.raises(ValueError):
        extended_binomial_row(2, 0)


def test_extended_rows_against_brute_force():
    for k in range(5):
        for n in range(1, 5):
            counts = [0] * (k * (n - 1) + 1)
            for digits in product(range(n), repeat=k):
                counts[sum(digits)] += 1
            assert extended_binomial_row(k, n) == tuple(counts)


def test_extended_row_properties():
    for k in range(7):
        for n in range(1, 7):
            row = extended_binomial_row(k, n)
            assert len(row) == k * (n - 1) + 1
            assert row == row[::-1]
            assert sum(row) == n**k
    for n in range(1, 8):
        assert extended_binomial_row(1, n) == (1,) * n
    for k in range(10):
        assert extended_binomial_row(k, 2) == tuple(binomial(k, q) for q in range(k + 1))


def test_tables_grow_in_any_order():
    t = CombinatorialTables()
    assert t.extended_binomial_row(4, 3) == extended_binomial_row(4, 3)
    assert t.extended_binomial_row(2, 3) == (1, 2, 3, 2, 1)
    assert t.stirling2(9, 3) == stirling2(9, 3)
    assert t.stirling2(5, 2) == 15


def test_concurrent_reads_agree():
    from concurrent.futures import ThreadPoolExecutor

    t = CombinatorialTables()
    jobs = [(n, k) for n in range(40, 0, -1) for k in range(0, n + 1, 7)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda nk: t.stirling2(*nk), jobs))
    assert got == [stirling2(n, k) for n, k in jobs]
