"""Exact verifiers for the Bernoulli/Stirling recurrences and the R-polynomial lemmas.

Each verifier returns an :class:`IdentityReport`. Where both sides are
polynomials the comparison is coefficient-wise; evaluation is used only
when one side is a brute-force sum.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from . import bernoulli as bern
from . import combinatorics as comb
from . import powersums
from .exactnum import Polynomial, poly_eval
from .report import IdentityReport

REFERENCE_NOTE = {"bernoulli_path": "convolution"}


def _require_order(k: int, r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if k < r:
        raise ValueError(f"need k >= r, got k={k}, r={r}")


def _weighted_sum(m: int, k: int, values: Callable[[int], Fraction]) -> Fraction:
    """sum_{q=0..m} C(m+k, q) S(m+k-q, k) values(q)."""
    C, S = comb.binomial, comb.stirling2
    return sum((C(m + k, q) * S(m + k - q, k) * values(q) for q in range(m + 1)), Fraction(0))


def verify_bernoulli_recurrence(m: int) -> IdentityReport:
    B = lambda q: bern.higher_bernoulli(q, 1, "convolution")
    lhs = sum((comb.binomial(m + 1, q) * B(q) for q in range(m + 1)), Fraction(0))
    return IdentityReport.build("bernoulli-recurrence", {"m": m}, lhs, int(m == 0), REFERENCE_NOTE)


def verify_stirling_weighted_recurrence(m: int, k: int) -> IdentityReport:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    lhs = _weighted_sum(m, k, bern.bernoulli)
    rhs = Fraction(m + k, k) * comb.stirling2(m + k - 1, k - 1)
    return IdentityReport.build("stirling-weighted", {"m": m, "k": k}, lhs, rhs)


def verify_higher_recurrence(m: int, k: int) -> IdentityReport:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    lhs = _weighted_sum(m, k, lambda q: bern.higher_bernoulli(q, k, "convolution"))
    return IdentityReport.build(
        "higher-recurrence", {"m": m, "k": k}, lhs, int(m == 0), REFERENCE_NOTE
    )


def general_relation_rhs(m: int, k: int, r: int) -> Fraction:
    _require_order(k, r)
    C = comb.binomial
    return Fraction(C(m + k, k), C(m + k - r, k - r)) * comb.stirling2(m + k - r, k - r)


def verify_general_relation(m: int, k: int, r: int) -> IdentityReport:
    _require_order(k, r)
    lhs = _weighted_sum(m, k, lambda q: bern.higher_bernoulli(q, r, "convolution"))
    return IdentityReport.build(
        "general-relation", {"m": m, "k": k, "r": r}, lhs, general_relation_rhs(m, k, r),
        REFERENCE_NOTE,
    )


def _r_closed_form_coeffs(m: int, k: int, r: int) -> dict[int, Fraction]:
    C, S = comb.binomial, comb.stirling2
    norm = C(k, r)
    return {
        r + j: Fraction(
            (-1) ** j * C(m + k, m + k - r - j) * S(m + k - r - j, k - r) * S(r + j, r), norm
        )
        for j in range(m + 1)
    }


def compute_R(m: int, k: int, r: int, path: str = "definition") -> Polynomial:
    _require_order(k, r)
    if path == "definition":
        C, S = comb.binomial, comb.stirling2
        total = Polynomial.zero("n")
        for q in range(m + 1):
            w = (-1) ** q * C(m + k, q) * S(m + k - q, k)
            if w:
                total = total + powersums.higher_faulhaber_poly(q, r).scale(w)
        return total
    if path == "closed_form":
        coeffs = _r_closed_form_coeffs(m, k, r)
        dense = [Fraction(0)] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            dense[e] = c
        return Polynomial("n", dense)
    raise ValueError(f"unknown path {path!r}; expected 'definition' or 'closed_form'")


def verify_r_polynomial(m: int, k: int, r: int) -> IdentityReport:
    return IdentityReport.build(
        "r-polynomial", {"m": m, "k": k, "r": r},
        compute_R(m, k, r, "definition"), compute_R(m, k, r, "closed_form"),
    )


def verify_r_diagonal(m: int, k: int) -> IdentityReport:
    """At k = r the closed form collapses to (-1)^m S(m+k, k) n^(m+k)."""
    expected = Polynomial.monomial("n", m + k, (-1) ** m * comb.stirling2(m + k, k))
    return IdentityReport.build(
        "r-diagonal", {"m": m, "k": k}, compute_R(m, k, k, "closed_form"), expected
    )


def verify_sum_identity(m: int, k: int, r: int, n: int) -> IdentityReport:
    _require_order(k, r)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    C, S = comb.binomial, comb.stirling2
    lhs = sum(
        (
            (-1) ** q * C(m + k, q) * S(m + k - q, k) * powersums.higher_power_sum(q, r, n)
            for q in range(m + 1)
        ),
        0,
    )
    rhs = poly_eval(compute_R(m, k, r, "closed_form"), n)
    return IdentityReport.build("sum-identity", {"m": m, "k": k, "r": r, "n": n}, lhs, rhs)


def verify_theorem(m: int, k: int, n: int) -> IdentityReport:
    return powersums.theorem_check(powersums.PowerSumQuery(m, k, n))


def verify_stirling_form(m: int, k: int) -> IdentityReport:
    return IdentityReport.build(
        "stirling-form", {"m": m, "k": k},
        bern.bernoulli_via_stirling(m, k), bern.higher_bernoulli(m, k, "convolution"),
        REFERENCE_NOTE,
    )


# parameter sweeps

def _orders(k_max: int, r_max: int | None) -> Iterator[tuple[int, int]]:
    for k in range(1, k_max + 1):
        top = k if r_max is None else min(k, r_max)
        for r in range(1, top + 1):
            yield k, r


def sweep(identity_id: str, m_max: int, k_max: int = 1, r_max: int | None = None,
          n_max: int = 1) -> list[IdentityReport]:
    """All reports for one identity over its grid, in deterministic order."""
    ms = range(m_max + 1)
    ks = range(1, k_max + 1)
    ns = range(1, n_max + 1)
    if identity_id == "bernoulli-recurrence":
        return [verify_bernoulli_recurrence(m) for m in ms]
    if identity_id == "stirling-weighted":
        return [verify_stirling_weighted_recurrence(m, k) for k in ks for m in ms]
    if identity_id == "higher-recurrence":
        return [verify_higher_recurrence(m, k) for k in ks for m in ms]
    if identity_id == "general-relation":
        return [verify_general_relation(m, k, r) for k, r in _orders(k_max, r_max) for m in ms]
    if identity_id == "r-polynomial":
        return [verify_r_polynomial(m, k, r) for k, r in _orders(k_max, r_max) for m in ms]
    if identity_id == "r-diagonal":
        return [verify_r_diagonal(m, k) for k in ks for m in ms]
    if identity_id == "sum-identity":
        return [verify_sum_identity(m, k, r, n)
                for k, r in _orders(k_max, r_max) for m in ms for n in ns]
    if identity_id == "theorem":
        return [verify_theorem(m, k, n) for k in ks for m in ms for n in ns]
    if identity_id == "stirling-form":
        return [verify_stirling_form(m, k) for k in ks for m in range(1, m_max + 1)]
    raise KeyError(identity_id)


def specialization_reports(m_max: int, k_max: int) -> list[IdentityReport]:
    """Check that the general relation reduces to its r=1 and r=k special cases.

    For every (m, k) both sides of the general relation are compared with the
    corresponding sides of the special case, giving four reports.
    """
    out = []
    for k in range(1, k_max + 1):
        for m in range(m_max + 1):
            pairs = (
                ("specialization-r1", verify_general_relation(m, k, 1),
                 verify_stirling_weighted_recurrence(m, k)),
                ("specialization-rk", verify_general_relation(m, k, k),
                 verify_higher_recurrence(m, k)),
            )
            for name, general, special in pairs:
                for side in ("lhs", "rhs"):
                    out.append(IdentityReport.build(
                        f"{name}-{side}", {"m": m, "k": k},
                        getattr(general, side), getattr(special, side),
                    ))
    return out


IDENTITIES = (
    "bernoulli-recurrence",
    "stirling-weighted",
    "higher-recurrence",
    "general-relation",
    "r-polynomial",
    "r-diagonal",
    "sum-identity",
    "theorem",
    "stirling-form",
)

# short aliases accepted on the command line
ALIASES = {
    "rec-rel": "bernoulli-recurrence",
    "rec-rel1": "stirling-weighted",
    "impl": "higher-recurrence",
    "impl1": "general-relation",
    "le2": "r-polynomial",
    "lee": "r-polynomial",
    "rec-rel2": "r-diagonal",
    "le3": "sum-identity",
    "id": "sum-identity",
    "8": "stirling-form",
}


def resolve(identity_id: str) -> str:
    name = ALIASES.get(identity_id, identity_id)
    if name not in IDENTITIES and name != "all":
        raise KeyError(identity_id)
    return name
