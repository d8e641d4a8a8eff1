"""Exact derangement, Stirling, Bell and Euler computations with identity checks."""

from .exact import BiPoly, GaussianRational, Poly, Rational
from .polys import (
    cosine_derangement,
    derangement_complex_eval,
    derangement_poly,
    fixed_point_enumerator,
    sine_derangement,
)
from .sequences import (
    bell_number,
    bell_polynomial,
    binomial,
    brute_force_derangements,
    derangement_number,
    euler_number,
    factorial,
    multinomial,
    stirling_first,
    stirling_second,
)
from .series import TruncatedSeries, egf_coefficient

__all__ = [
    "BiPoly",
    "GaussianRational",
    "Poly",
    "Rational",
    "TruncatedSeries",
    "bell_number",
    "bell_polynomial",
    "binomial",
    "brute_force_derangements",
    "cosine_derangement",
    "derangement_complex_eval",
    "derangement_number",
    "derangement_poly",
    "egf_coefficient",
    "euler_number",
    "factorial",
    "fixed_point_enumerator",
    "multinomial",
    "sine_derangement",
    "stirling_first",
    "stirling_second",
]
