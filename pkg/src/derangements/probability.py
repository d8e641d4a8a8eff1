"""Moments of X ~ Gamma(1, 1) and their link to derangement polynomials.

For ``X`` exponential with rate 1, ``E[X^l] = l!``, so binomially expanding
``E[(X - 1 + p)^n]`` gives an exact rational that must equal ``D_n(p)``;
likewise the real and imaginary parts of ``E[(X - 1 + p + iq)^n]`` give the
cosine and sine polynomials at ``(p, q)``.  :func:`mc_moment` estimates the
same quantities by sampling.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import GaussianRational, Scalar, as_rational
from .polys import cosine_derangement, derangement_poly, sine_derangement
from .report import IdentityCheck, IdentityReport, Mode, expect_equal, run_check
from .sequences import binomial

MIN_SAMPLES = 10_000
CHUNK = 1 << 18


class InsufficientSamples(ValueError):
    pass


class MomentKind(enum.Enum):
    PLAIN = "plain"
    COSINE = "cosine"
    SINE = "sine"


@dataclass(frozen=True)
class GammaParams:
    alpha: float | Fraction
    lam: float | Fraction

    def __post_init__(self):
        if not (self.alpha > 0 and self.lam > 0):
            raise ValueError("gamma parameters must be positive")


@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def gamma_moment_exact(params: GammaParams, n: int):
    """``alpha (alpha+1) ... (alpha+n-1) / lam^n``.

    Exact ``Fraction`` when both parameters are rational, float otherwise.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if _is_exact(params.alpha) and _is_exact(params.lam):
        a, lam = Fraction(params.alpha), Fraction(params.lam)
        out = Fraction(1)
        for k in range(n):
            out *= a + k
        return out / lam**n
    a, lam = float(params.alpha), float(params.lam)
    return math.exp(math.lgamma(a + n) - math.lgamma(a) - n * math.log(lam))


UNIT_GAMMA = GammaParams(1, 1)


def shifted_moment(p: Scalar, n: int) -> Fraction:
    """``E[(X - 1 + p)^n] = sum_l C(n,l) (p-1)^(n-l) E[X^l]``."""
    p = as_rational(p)
    return sum(
        (binomial(n, l) * (p - 1) ** (n - l) * gamma_moment_exact(UNIT_GAMMA, l) for l in range(n + 1)),
        Fraction(0),
    )


def shifted_complex_moment(p: Scalar, q: Scalar, n: int) -> GaussianRational:
    """``E[(X - 1 + p + iq)^n]`` as an exact Gaussian rational."""
    w = GaussianRational(as_rational(p) - 1, as_rational(q))
    acc = GaussianRational()
    for l in range(n + 1):
        acc = acc + w ** (n - l) * (binomial(n, l) * gamma_moment_exact(UNIT_GAMMA, l))
    return acc


def moment_identity_exact(p: Scalar, n: int) -> IdentityReport:
    p = as_rational(p)
    check = IdentityCheck(
        "moment-plain",
        "E[(X-1+p)^n] = D_n(p), X ~ Gamma(1,1)",
        Mode.EXACT_POINT,
        {"p": p, "n": n},
    )

    def body():
        lhs = shifted_moment(p, n)
        expect_equal(lhs, derangement_poly(n).poly(p), p=p, n=n, side="D_n(p)")
        alt = sum(binomial(n, l) * (p - 1) ** (n - l) * math.factorial(l) for l in range(n + 1))
        expect_equal(lhs, alt, p=p, n=n, side="factorial sum")
        if p == 0:
            unshifted = sum(binomial(n, l) * (-1) ** (n - l) * math.factorial(l) for l in range(n + 1))
            expect_equal(unshifted, derangement_poly(n).poly.coeff(0), n=n, side="D_n")

    return run_check(check, body)


def trig_moment_identity_exact(p: Scalar, q: Scalar, n: int) -> IdentityReport:
    p, q = as_rational(p), as_rational(q)
    check = IdentityCheck(
        "moment-trig",
        "E[((X-1+p+iq)^n +/- (X-1+p-iq)^n)/(2 or 2i)] = cosine/sine polynomial at (p,q)",
        Mode.EXACT_POINT,
        {"p": p, "q": q, "n": n},
    )

    def body():
        plus = shifted_complex_moment(p, q, n)
        minus = shifted_complex_moment(p, -q, n)
        cos_side = (plus + minus) / 2
        sin_side = (plus - minus) / GaussianRational(0, 2)
        expect_equal(cos_side.im, 0, p=p, q=q, n=n, side="cosine imaginary part")
        expect_equal(sin_side.im, 0, p=p, q=q, n=n, side="sine imaginary part")
        expect_equal(cos_side.re, cosine_derangement(n).poly.eval(p, q), p=p, q=q, n=n, side="cosine")
        expect_equal(sin_side.re, sine_derangement(n).poly.eval(p, q), p=p, q=q, n=n, side="sine")

    return run_check(check, body)


def exact_moment(p: Scalar, q: Scalar, n: int, kind: MomentKind | str) -> Fraction:
    """Exact target of :func:`mc_moment`."""
    kind = MomentKind(kind)
    if kind is MomentKind.PLAIN:
        return derangement_poly(n).poly(as_rational(p))
    if kind is MomentKind.COSINE:
        return cosine_derangement(n).poly.eval(p, q)
    return sine_derangement(n).poly.eval(p, q)


def sample_exponential(rng: np.random.Generator, size: int) -> np.ndarray:
    """Exp(1) draws by inverse CDF, ``-log(1 - U)``."""
    return -np.log1p(-rng.random(size))


def mc_moment(
    p: float,
    q: float,
    n: int,
    kind: MomentKind | str = MomentKind.PLAIN,
    samples: int = 1_000_000,
    seed: int = 0,
) -> MomentEstimate:
    """Monte Carlo estimate of ``E[f((X - 1 + p + iq)^n)]`` for X ~ Exp(1).

    ``f`` is the identity for ``plain`` (``q`` ignored), the real part for
    ``cosine`` and the imaginary part for ``sine``.  The generator is NumPy's
    PCG64 seeded with ``seed``; samples are drawn in fixed-size chunks from a
    single stream so the result depends only on ``(seed, samples)``.
    """
    return mc_moments(p, q, [n], kind, samples, seed)[0]


def mc_moments(p, q, orders, kind=MomentKind.PLAIN, samples=1_000_000, seed=0) -> list[MomentEstimate]:
    """:func:`mc_moment` for several orders from one shared sample stream.

    Entry ``k`` is identical to ``mc_moment(p, q, orders[k], kind, samples, seed)``.
    """
    kind = MomentKind(kind)
    orders = list(orders)
    if samples < MIN_SAMPLES:
        raise InsufficientSamples("insufficient samples")
    if any(n < 0 for n in orders):
        raise ValueError("n must be non-negative")
    rng = np.random.Generator(np.random.PCG64(seed))
    total = [0.0] * len(orders)
    total_sq = [0.0] * len(orders)
    remaining = samples
    while remaining:
        size = min(CHUNK, remaining)
        remaining -= size
        x = sample_exponential(rng, size)
        for k, n in enumerate(orders):
            if kind is MomentKind.PLAIN:
                vals = (x - 1.0 + p) ** n
            else:
                z = ((x - 1.0 + p) + 1j * q) ** n
                vals = z.real if kind is MomentKind.COSINE else z.imag
            total[k] += float(vals.sum())
            total_sq[k] += float(np.dot(vals, vals))
    out = []
    for s1, s2 in zip(total, total_sq):
        mean = s1 / samples
        var = max(s2 - samples * mean * mean, 0.0) / (samples - 1)
        out.append(MomentEstimate(mean=mean, std_error=math.sqrt(var / samples), samples=samples, seed=seed))
    return out


def z_score(estimate: MomentEstimate, exact: float) -> float:
    diff = estimate.mean - float(exact)
    if estimate.std_error == 0:
        return 0.0 if diff == 0 else math.copysign(math.inf, diff)
    return diff / estimate.std_error
