"""Exact higher-order power sums of integers and higher-order Bernoulli numbers."""
from . import bernoulli, combinatorics, partition_sums
from .bernoulli import bernoulli as bernoulli_number
from .bernoulli import higher_bernoulli, norlund_polynomial, stirling_polynomial
from .exactnum import Polynomial, Rational, format_rational
from .powersums import faulhaber_poly, higher_faulhaber_poly, higher_power_sum, power_sum
from .report import IdentityReport

__version__ = "0.1.0"


def reset_caches() -> None:
    """Replace the shared tables and Bernoulli caches with empty ones."""
    combinatorics.TABLES = combinatorics.CombinatorialTables()
    bernoulli.FAMILY = bernoulli.BernoulliFamily()
    partition_sums._coefficients.cache_clear()


__all__ = [
    "IdentityReport",
    "Polynomial",
    "Rational",
    "bernoulli_number",
    "faulhaber_poly",
    "format_rational",
    "higher_bernoulli",
    "higher_faulhaber_poly",
    "higher_power_sum",
    "norlund_polynomial",
    "power_sum",
    "reset_caches",
    "stirling_polynomial",
]
