from fractions import Fraction as F

import pytest

from higher_sums import identities as ids
from higher_sums.exactnum import Polynomial


def test_bernoulli_recurrence_examples():
    for m in (0, 1, 6):
        r = ids.verify_bernoulli_recurrence(m)
        assert r.holds
    assert ids.verify_bernoulli_recurrence(0).lhs == 1
    assert ids.verify_bernoulli_recurrence(0).notes["bernoulli_path"] == "convolution"


def test_stirling_weighted_examples():
    assert all(ids.verify_stirling_weighted_recurrence(m, 1).holds for m in range(8))
    r = ids.verify_stirling_weighted_recurrence(2, 2)
    assert r.holds and r.lhs == r.rhs == 2
    assert ids.verify_stirling_weighted_recurrence(3, 3).holds


def test_higher_recurrence_examples():
    assert all(ids.verify_higher_recurrence(0, k).holds for k in range(1, 6))
    r = ids.verify_higher_recurrence(2, 2)
    assert r.holds and r.lhs == 0
    assert ids.verify_higher_recurrence(4, 3).holds


def test_general_relation_examples():
    assert ids.verify_general_relation(2, 2, 2).rhs == 0
    r = ids.verify_general_relation(2, 2, 1)
    assert r.holds and r.rhs == 2
    assert ids.verify_general_relation(2, 3, 2).holds


def test_general_relation_precondition():
    with pytest.raises(ValueError):
        ids.verify_general_relation(1, 2, 3)
    with pytest.raises(ValueError):
        ids.compute_R(1, 1, 2)
    with pytest.raises(ValueError):
        ids.verify_sum_identity(1, 1, 2, 3)


def test_general_relation_sweep():
    reports = ids.sweep("general-relation", 8, 5)
    assert len(reports) == 9 * 15
    assert all(r.holds for r in reports)


def test_specialization_chain():
    reports = ids.specialization_reports(8, 5)
    assert len(reports) == 9 * 5 * 4
    assert all(r.holds for r in reports)


def test_R_diagonal_closed_form():
    for k in range(1, 5):
        for m in range(7):
            from higher_sums.combinatorics import stirling2

            expected = Polynomial.monomial("n", m + k, (-1) ** m * stirling2(m + k, k))
            assert ids.compute_R(m, k, k, "closed_form") == expected
            assert ids.compute_R(m, k, k, "definition") == expected


def test_R_examples():
    n = Polynomial("n", (0, 1))
    assert ids.compute_R(0, 1, 1, "definition") == n
    assert ids.compute_R(0, 1, 1, "closed_form") == n
    assert (ids.compute_R(1, 2, 1, "definition") - ids.compute_R(1, 2, 1, "closed_form")).is_zero()


def test_R_paths_agree():
    for k in range(1, 5):
        for r in range(1, k + 1):
            for m in range(7):
                assert ids.verify_r_polynomial(m, k, r).holds


def test_sum_identity_examples():
    assert ids.verify_sum_identity(2, 1, 1, 3).holds
    assert ids.verify_sum_identity(1, 2, 1, 2).holds
    r = ids.verify_sum_identity(1, 2, 2, 3)
    assert r.holds and r.lhs == -81


def test_sum_identity_sweep():
    assert all(r.holds for r in ids.sweep("sum-identity", 6, 4, None, 6))


def test_report_kinds():
    scalar = ids.verify_general_relation(1, 1, 1)
    poly = ids.verify_r_polynomial(1, 2, 1)
    assert scalar.kind == "scalar" and poly.kind == "polynomial"
    assert poly.residual.is_zero()
    d = poly.to_dict()
    assert d["lhs"]["var"] == "n" and d["holds"] is True


def test_report_detects_mismatch():
    from higher_sums.report import IdentityReport

    bad = IdentityReport.build("x", {}, F(1, 2), F(1, 3))
    assert not bad.holds and bad.residual == F(1, 6)
    with pytest.raises(TypeError):
        IdentityReport.build("x", {}, F(1), Polynomial("n", (1,)))


def test_aliases_resolve():
    assert ids.resolve("impl1") == "general-relation"
    assert ids.resolve("all") == "all"
    with pytest.raises(KeyError):
        ids.resolve("nope")


@pytest.mark.parametrize("name", ids.IDENTITIES)
def test_every_identity_sweeps_clean(name):
    assert all(r.holds for r in ids.sweep(name, 4, 3, None, 3))
