"""Derangement polynomials and their cosine/sine companions.

``D_n(x)`` has EGF ``e^{-t} e^{xt} / (1 - t)``.  The cosine and sine
versions multiply that EGF by ``cos(yt)`` and ``sin(yt)``; they are the real
and imaginary parts of ``D_n(x + iy)``.

Each public constructor builds its polynomial two ways and refuses to return
if the routes disagree.  The route-level builders are exposed too, so the
identity checks can feed them alternative (e.g. corrupted) number tables.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import BiPoly, GaussianRational, Poly, as_rational
from .sequences import OracleTooLarge, binomial, derangement_numbers

FIXED_POINT_CAP = 8


class ConsistencyError(RuntimeError):
    """Two independent constructions of the same object disagreed."""


class TrigKind(enum.Enum):
    COSINE = "cosine"
    SINE = "sine"


@dataclass(frozen=True)
class DerangementPoly:
    n: int
    poly: Poly


@dataclass(frozen=True)
class TrigDerangementPoly:
    n: int
    kind: TrigKind
    poly: BiPoly


# -- D_n(x) -------------------------------------------------------------------


def poly_from_numbers(n: int, dnums: Sequence[int]) -> Poly:
    """``sum_l C(n,l) D_l x^(n-l)``."""
    coeffs = [0] * (n + 1)
    for l in range(n + 1):
        coeffs[n - l] = binomial(n, l) * dnums[l]
    return Poly(coeffs)


def poly_exp_partial_sum(n: int) -> Poly:
    """``n! sum_{m<=n} (x-1)^m / m!``."""
    shift = Poly([-1, 1])
    acc = Poly()
    power = Poly([1])
    for m in range(n + 1):
        acc = acc + power * Fraction(math.factorial(n), math.factorial(m))
        power = power * shift
    return acc


@lru_cache(maxsize=None)
def derangement_poly(n: int) -> DerangementPoly:
    if n < 0:
        raise ValueError("n must be non-negative")
    p = poly_from_numbers(n, derangement_numbers(n))
    q = poly_exp_partial_sum(n)
    if p != q:
        raise ConsistencyError(f"D_{n}(x): binomial form {p} != exponential form {q}")
    return DerangementPoly(n, p)


def fixed_point_enumerator(n: int) -> Poly:
    """``sum over permutations s of x^fix(s)``, by enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > FIXED_POINT_CAP:
        raise OracleTooLarge("oracle too large")
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        counts[sum(p == i for i, p in enumerate(perm))] += 1
    return Poly(counts)


# -- cosine / sine: route builders ---------------------------------------------


def cosine_double_sum(n: int, dnums: Sequence[int]) -> BiPoly:
    """``sum_m sum_{k>=2m} C(n,k) C(k,2m) D_{n-k} (-1)^m y^{2m} x^{k-2m}``."""
    terms: dict[tuple[int, int], int] = {}
    for m in range(n // 2 + 1):
        for k in range(2 * m, n + 1):
            key = (k - 2 * m, 2 * m)
            terms[key] = terms.get(key, 0) + (
                binomial(n, k) * binomial(k, 2 * m) * dnums[n - k] * (-1) ** m
            )
    return BiPoly(terms)


def sine_double_sum(n: int, dnums: Sequence[int]) -> BiPoly:
    """``sum_j sum_m C(j,2m+1) C(n,j) (-1)^m x^{j-2m-1} y^{2m+1} D_{n-j}``."""
    terms: dict[tuple[int, int], int] = {}
    for j in range(1, n + 1):
        for m in range((j - 1) // 2 + 1):
            key = (j - 2 * m - 1, 2 * m + 1)
            terms[key] = terms.get(key, 0) + (
                binomial(j, 2 * m + 1) * binomial(n, j) * dnums[n - j] * (-1) ** m
            )
    return BiPoly(terms)


def sine_from_polys(n: int, dpolys: Sequence[Poly]) -> BiPoly:
    """``sum_m C(n,2m+1) (-1)^m y^{2m+1} D_{n-2m-1}(x)``."""
    acc = BiPoly()
    if n == 0:
        return acc
    for m in range((n - 1) // 2 + 1):
        ypow = BiPoly({(0, 2 * m + 1): binomial(n, 2 * m + 1) * (-1) ** m})
        acc = acc + ypow * BiPoly.from_poly(dpolys[n - 2 * m - 1])
    return acc


def _cmul(a: tuple[BiPoly, BiPoly], b: tuple[BiPoly, BiPoly]) -> tuple[BiPoly, BiPoly]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _exp_partial_sum_complex(n: int, sign: int) -> tuple[BiPoly, BiPoly]:
    """``n! sum_m (x - 1 + sign*i*y)^m / m!`` as (real, imaginary) BiPolys."""
    base = (BiPoly({(1, 0): 1, (0, 0): -1}), BiPoly({(0, 1): sign}))
    power = (BiPoly.constant(1), BiPoly())
    re, im = BiPoly(), BiPoly()
    for m in range(n + 1):
        w = Fraction(math.factorial(n), math.factorial(m))
        re, im = re + power[0] * w, im + power[1] * w
        power = _cmul(power, base)
    return re, im


def trig_complex_pair(n: int) -> tuple[BiPoly, BiPoly]:
    """Cosine and sine polynomials from ``(D_n(x+iy) +/- D_n(x-iy))``.

    Both conjugate expansions are computed independently; the parts that
    must cancel are checked rather than dropped.
    """
    p_re, p_im = _exp_partial_sum_complex(n, +1)
    q_re, q_im = _exp_partial_sum_complex(n, -1)
    half = Fraction(1, 2)
    # (P + Q) / 2
    cos_re, cos_im = (p_re + q_re) * half, (p_im + q_im) * half
    # (P - Q) / (2i) = -i (P - Q) / 2
    sin_re, sin_im = (p_im - q_im) * half, (q_re - p_re) * half
    if not cos_im.is_zero() or not sin_im.is_zero():
        raise ConsistencyError(f"n={n}: conjugate combination left an imaginary remainder")
    return cos_re, sin_re


# -- cosine / sine: public constructors ---------------------------------------


@lru_cache(maxsize=None)
def cosine_derangement(n: int) -> TrigDerangementPoly:
    if n < 0:
        raise ValueError("n must be non-negative")
    c = cosine_double_sum(n, derangement_numbers(n))
    via_pair, _ = trig_complex_pair(n)
    if c != via_pair:
        raise ConsistencyError(f"cosine n={n}: double sum {c} != conjugate pair {via_pair}")
    return TrigDerangementPoly(n, TrigKind.COSINE, c)


@lru_cache(maxsize=None)
def sine_derangement(n: int) -> TrigDerangementPoly:
    if n < 0:
        raise ValueError("n must be non-negative")
    dpolys = [derangement_poly(k).poly for k in range(n + 1)]
    s = sine_from_polys(n, dpolys)
    for name, other in (
        ("double sum", sine_double_sum(n, derangement_numbers(n))),
        ("conjugate pair", trig_complex_pair(n)[1]),
    ):
        if s != other:
            raise ConsistencyError(f"sine n={n}: D_k(x) sum {s} != {name} {other}")
    return TrigDerangementPoly(n, TrigKind.SINE, s)


def trig_derangement(n: int, kind: TrigKind | str) -> TrigDerangementPoly:
    kind = TrigKind(kind)
    return cosine_derangement(n) if kind is TrigKind.COSINE else sine_derangement(n)


def derangement_complex_eval(n: int, z) -> GaussianRational:
    """``D_n(z) = n! sum_m (z - 1)^m / m!`` evaluated exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not isinstance(z, GaussianRational):
        z = GaussianRational(as_rational(z))
    w = z - 1
    acc = GaussianRational()
    power = GaussianRational(1)
    for m in range(n + 1):
        acc = acc + power * Fraction(math.factorial(n), math.factorial(m))
        power = power * w
    return acc
