"""Registry of identity checks over derangement, Bell, Stirling and Euler data.

Identities between polynomials are compared as canonical polynomials, which
settles them for every ``x`` (and ``y``) at once.  Only the Euler/Bell
identity, whose right side is a divergent series, is checked numerically;
see :func:`abel_rhs`.

All checks read derangement numbers through a :class:`Tables` object so a
deliberately corrupted table can be injected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

import mpmath

from .exact import BiPoly, GaussianRational, Poly, as_rational
from .polys import (
    cosine_double_sum,
    derangement_complex_eval,
    poly_exp_partial_sum,
    poly_from_numbers,
    sine_double_sum,
    sine_from_polys,
    trig_complex_pair,
)
from .probability import moment_identity_exact, trig_moment_identity_exact
from .report import (
    IdentityCheck,
    IdentityReport,
    Mismatch,
    Mode,
    Status,
    expect_equal,
    run_check,
)
from .sequences import (
    bell_polynomial,
    binomial,
    derangement_numbers,
    euler_number,
    multinomial,
    stirling_first,
    stirling_second,
)

F = Fraction

DEFAULT_GRID = (F(-2), F(-1, 2), F(0), F(1, 2), F(1), F(3))
DEFAULT_TRIG_GRID = (F(-1), F(0), F(1, 2), F(2))


@dataclass
class VerifyConfig:
    n_max: int = 20
    tolerance: float = 1e-9
    tail_terms: int = 60
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    trig_grid: tuple[Fraction, ...] = DEFAULT_TRIG_GRID
    r_max: int = 5
    composition_n_max: int = 10
    abel_n_max: int = 6
    abel_points: tuple[Fraction, ...] = (F(0), F(1, 2), F(1), F(2))
    moment_n_max: int = 20
    trig_moment_n_max: int = 15

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        self.grid = tuple(as_rational(v) for v in self.grid)
        self.trig_grid = tuple(as_rational(v) for v in self.trig_grid)
        self.abel_points = tuple(as_rational(v) for v in self.abel_points)

    @classmethod
    def from_mapping(cls, data: Mapping) -> "VerifyConfig":
        if "n_max" not in data or data["n_max"] is None:
            raise ValueError("missing n_max")
        return cls(**{k: v for k, v in data.items() if v is not None})


class Tables:
    """Derangement data derived from a table of numbers ``D_0 .. D_N``."""

    def __init__(self, dnums: Sequence[int] | None = None, n_max: int = 30):
        self.dnums = list(dnums) if dnums is not None else derangement_numbers(n_max)
        self._poly: dict[int, Poly] = {}
        self._cos: dict[int, BiPoly] = {}
        self._sin: dict[int, BiPoly] = {}

    @property
    def n_max(self) -> int:
        return len(self.dnums) - 1

    def dpoly(self, n: int) -> Poly:
        if n not in self._poly:
            self._poly[n] = poly_from_numbers(n, self.dnums)
        return self._poly[n]

    def cos(self, n: int) -> BiPoly:
        if n not in self._cos:
            self._cos[n] = cosine_double_sum(n, self.dnums)
        return self._cos[n]

    def sin(self, n: int) -> BiPoly:
        if n not in self._sin:
            self._sin[n] = sine_from_polys(n, [self.dpoly(k) for k in range(n + 1)])
        return self._sin[n]


# -- helpers -------------------------------------------------------------------

X_MINUS_1 = Poly([-1, 1])
ONE_MINUS_X = Poly([1, -1])


def bell_at_one_minus_x(m: int) -> Poly:
    return bell_polynomial(m).compose_affine(-1, 1)


def bell_from_derangements(n: int, family: Callable[[int], Poly]) -> Poly:
    """``sum_j sum_l C(n,j) (-1)^l f_l S2(j,l)``."""
    acc = Poly()
    for j in range(n + 1):
        for l in range(j + 1):
            c = binomial(n, j) * (-1) ** l * stirling_second(j, l)
            if c:
                acc = acc + family(l) * c
    return acc


def derangements_from_bell(n: int, family: Callable[[int], Poly]) -> Poly:
    """``sum_l sum_m C(l,m) g_m (-1)^(n-m-l) S1(n,l)``."""
    acc = Poly()
    for l in range(n + 1):
        s1 = stirling_first(n, l)
        if not s1:
            continue
        for m in range(l + 1):
            acc = acc + family(m) * (binomial(l, m) * (-1) ** ((n - m - l) % 2) * s1)
    return acc


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first, *rest)


def composition_sum(r: int, n: int, tables: Tables) -> Fraction:
    """Right side of the rising-binomial identity for ``(r, n)``."""
    d = tables.dnums
    acc = 0
    for k in range(n + 1):
        inner = 0
        for comp in weak_compositions(k, r - 1):
            prod = multinomial(k, comp)
            for l in comp:
                prod *= d[l]
            inner += prod
        acc += inner * binomial(n, k) * tables.dpoly(n - k)(r)
    return F(acc) / math.factorial(n)


def euler_bell_lhs(n: int, x: Fraction) -> Fraction:
    """``sum_m Bel_m(1-x) E_{n-m} C(n,m)``, exact."""
    return sum(
        (bell_polynomial(m)(1 - x) * euler_number(n - m) * binomial(n, m) for m in range(n + 1)),
        F(0),
    )


def abel_rhs(n: int, x: Fraction, tail_terms: int, tables: Tables | None = None, dps: int = 50) -> float:
    """Abel-regularized ``2 e^{x-1} sum_m (-1)^m D_m(x) m^n / m!``.

    Writing ``D_m(x)/m! = e^{x-1} - R_m(x)`` splits the divergent sum into
    ``e^{x-1} * sum_A (-1)^m m^n = e^{x-1} E_n / 2`` plus the absolutely
    convergent ``-sum_m (-1)^m m^n R_m(x)``, truncated after ``tail_terms``.
    """
    tables = tables or Tables(n_max=tail_terms)
    if tables.n_max < tail_terms:
        raise ValueError("derangement table shorter than tail_terms")
    with mpmath.workdps(dps):
        x_mp = mpmath.mpf(x.numerator) / x.denominator
        e = mpmath.exp(x_mp - 1)
        tail = mpmath.mpf(0)
        for m in range(tail_terms + 1):
            dm = tables.dpoly(m)(x) / math.factorial(m)
            r_m = e - mpmath.mpf(dm.numerator) / dm.denominator
            tail += (-1) ** m * mpmath.mpf(m) ** n * r_m
        en = euler_number(n)
        abel = e * mpmath.mpf(en.numerator) / en.denominator / 2
        return float(2 * e * (abel - tail))


def abel_residual(n: int, x, tail_terms: int, tables: Tables | None = None) -> float:
    x = as_rational(x)
    return abs(float(euler_bell_lhs(n, x)) - abel_rhs(n, x, tail_terms, tables))


# -- checks --------------------------------------------------------------------

Runner = Callable[[VerifyConfig, Tables], IdentityReport]
REGISTRY: dict[str, Runner] = {}


def register(check_id: str):
    def deco(fn: Runner) -> Runner:
        REGISTRY[check_id] = fn
        return fn

    return deco


def _exact(check_id: str, statement: str, params: dict, mode: Mode = Mode.EXACT_POLY) -> IdentityCheck:
    return IdentityCheck(check_id, statement, mode, params)


@register("derangement-closed-forms")
def check_closed_forms(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "derangement-closed-forms",
        "n! sum_m (x-1)^m/m! = sum_l C(n,l) D_l x^(n-l)",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(cfg.n_max + 1):
            expect_equal(poly_exp_partial_sum(n), t.dpoly(n), n=n)

    return run_check(chk, body)


@register("poly-recurrence")
def check_poly_recurrence(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact("poly-recurrence", "D_n(x) - n D_{n-1}(x) = (x-1)^n", {"n_max": cfg.n_max})

    def body():
        for n in range(1, cfg.n_max + 1):
            expect_equal(t.dpoly(n) - t.dpoly(n - 1) * n, X_MINUS_1**n, n=n)

    return run_check(chk, body)


@register("bell-from-derangement")
def check_bell_from_derangement(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "bell-from-derangement",
        "Bel_n(1-x) = sum_j sum_l C(n,j) (-1)^l D_l(x) S2(j,l)",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(cfg.n_max + 1):
            expect_equal(bell_at_one_minus_x(n), bell_from_derangements(n, t.dpoly), n=n)

    return run_check(chk, body)


@register("derangement-from-bell")
def check_derangement_from_bell(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "derangement-from-bell",
        "D_n(x) = sum_l sum_m C(l,m) Bel_m(1-x) (-1)^(n-m-l) S1(n,l)",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(cfg.n_max + 1):
            expect_equal(t.dpoly(n), derangements_from_bell(n, bell_at_one_minus_x), n=n)

    return run_check(chk, body)


@register("bell-derangement-numbers")
def check_bell_derangement_numbers(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "bell-derangement-numbers",
        "x = 0: Bel_n = sum C(n,j)(-1)^l D_l S2(j,l); D_n = sum C(l,m) Bel_m (-1)^(n-m-l) S1(n,l)",
        {"n_max": cfg.n_max},
        Mode.EXACT_POINT,
    )

    def body():
        d = t.dnums
        for n in range(cfg.n_max + 1):
            bel = sum(
                binomial(n, j) * (-1) ** l * d[l] * stirling_second(j, l)
                for j in range(n + 1)
                for l in range(j + 1)
            )
            expect_equal(bell_polynomial(n)(1), bel, n=n, side="Bell number")
            dn = sum(
                binomial(l, m) * int(bell_polynomial(m)(1)) * (-1) ** ((n - m - l) % 2) * stirling_first(n, l)
                for l in range(n + 1)
                for m in range(l + 1)
            )
            expect_equal(d[n], dn, n=n, side="derangement number")

    return run_check(chk, body)


@register("bell-derangement-roundtrip")
def check_roundtrip(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "bell-derangement-roundtrip",
        "S1-transform of the S2-transform of (D_l(x)) returns D_n(x)",
        {"n_max": cfg.n_max},
    )

    def body():
        forward = [bell_from_derangements(m, t.dpoly) for m in range(cfg.n_max + 1)]
        for n in range(cfg.n_max + 1):
            expect_equal(derangements_from_bell(n, forward.__getitem__), t.dpoly(n), n=n)

    return run_check(chk, body)


@register("euler-bell-abel")
def check_euler_bell_abel(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = IdentityCheck(
        "euler-bell-abel",
        "sum_m Bel_m(1-x) E_{n-m} C(n,m) = 2 e^{x-1} sum_m (-1)^m D_m(x) m^n / m! (Abel sum)",
        Mode.NUMERIC_TOLERANCE,
        {
            "n_max": cfg.abel_n_max,
            "x": list(cfg.abel_points),
            "tail_terms": cfg.tail_terms,
        },
        tolerance=cfg.tolerance,
    )
    if cfg.tail_terms < cfg.abel_n_max + 40:
        raise ValueError("tail_terms must be at least n + 40")

    def body():
        worst = 0.0
        for n in range(cfg.abel_n_max + 1):
            for x in cfg.abel_points:
                lhs = float(euler_bell_lhs(n, x))
                rhs = abel_rhs(n, x, cfg.tail_terms, t)
                res = abs(lhs - rhs)
                worst = max(worst, res)
                if not res < cfg.tolerance:
                    raise Mismatch(n=n, x=x, lhs=lhs, rhs=rhs, residual=res)
        return worst

    return run_check(chk, body)


@register("rising-binomial-compositions")
def check_compositions(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "rising-binomial-compositions",
        "C(r+n-1,n) = (1/n!) sum_k sum_{l_1+..+l_{r-1}=k} multinom(k;l) C(n,k) D_l1..D_l(r-1) D_{n-k}(r)",
        {"r_max": cfg.r_max, "n_max": cfg.composition_n_max},
        Mode.EXACT_POINT,
    )

    def body():
        for r in range(1, cfg.r_max + 1):
            for n in range(cfg.composition_n_max + 1):
                expect_equal(composition_sum(r, n, t), binomial(r + n - 1, n), r=r, n=n)

    return run_check(chk, body)


@register("trig-expansions")
def check_trig_expansions(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "trig-expansions",
        "cosine: conjugate-pair form = binomial double sum; "
        "sine: conjugate-pair form = double sum = sum_m C(n,2m+1)(-1)^m y^(2m+1) D_{n-2m-1}(x)",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(cfg.n_max + 1):
            cos_pair, sin_pair = trig_complex_pair(n)
            expect_equal(cos_pair, t.cos(n), n=n, side="cosine")
            expect_equal(sin_pair, sine_double_sum(n, t.dnums), n=n, side="sine double sum")
            expect_equal(sin_pair, t.sin(n), n=n, side="sine via D_k(x)")

    return run_check(chk, body)


@register("complex-evaluation")
def check_complex_evaluation(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "complex-evaluation",
        "(D_n(x+iy) + D_n(x-iy))/2 = cosine(x,y); (D_n(x+iy) - D_n(x-iy))/(2i) = sine(x,y)",
        {"n_max": cfg.n_max, "grid": list(cfg.grid)},
        Mode.EXACT_POINT,
    )

    def body():
        two_i = GaussianRational(0, 2)
        for n in range(cfg.n_max + 1):
            for x in cfg.grid:
                for y in cfg.grid:
                    plus = derangement_complex_eval(n, GaussianRational(x, y))
                    minus = derangement_complex_eval(n, GaussianRational(x, -y))
                    expect_equal((plus + minus) / 2, t.cos(n).eval(x, y), n=n, x=x, y=y, side="cosine")
                    expect_equal((plus - minus) / two_i, t.sin(n).eval(x, y), n=n, x=x, y=y, side="sine")

    return run_check(chk, body)


@register("cosine-recurrence")
def check_cosine_recurrence(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "cosine-recurrence",
        "Dc_n - n Dc_{n-1} = sum_m C(n,2m) (-1)^m (x-1)^(n-2m) y^(2m)",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(1, cfg.n_max + 1):
            rhs = BiPoly()
            for m in range(n // 2 + 1):
                rhs = rhs + BiPoly.from_poly(X_MINUS_1 ** (n - 2 * m)) * BiPoly(
                    {(0, 2 * m): binomial(n, 2 * m) * (-1) ** m}
                )
            expect_equal(t.cos(n) - t.cos(n - 1) * n, rhs, n=n)

    return run_check(chk, body)


def _parity_sum(n: int, family: Callable[[int], BiPoly]) -> BiPoly:
    """``sum_{k=1}^n C(n,k) (f_k - k f_{k-1}) (1-x)^(n-k)``."""
    acc = BiPoly()
    for k in range(1, n + 1):
        diff = family(k) - family(k - 1) * k
        acc = acc + diff * BiPoly.from_poly(ONE_MINUS_X ** (n - k)) * binomial(n, k)
    return acc


@register("cosine-parity-sum")
def check_cosine_parity(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "cosine-parity-sum",
        "(1-x)^n + sum_m C(n,m)(1-x)^(n-m)(Dc_m - m Dc_{m-1}) = (-1)^k y^(2k) if n=2k, 0 if n odd",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(1, cfg.n_max + 1):
            lhs = BiPoly.from_poly(ONE_MINUS_X**n) + _parity_sum(n, t.cos)
            rhs = BiPoly({(0, n): (-1) ** (n // 2)}) if n % 2 == 0 else BiPoly()
            expect_equal(lhs, rhs, n=n)

    return run_check(chk, body)


@register("sine-parity-sum")
def check_sine_parity(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "sine-parity-sum",
        "sum_k C(n,k)(Ds_k - k Ds_{k-1})(1-x)^(n-k) = (-1)^(m-1) y^(2m-1) if n=2m-1, 0 if n even",
        {"n_max": cfg.n_max},
    )

    def body():
        for n in range(1, cfg.n_max + 1):
            rhs = BiPoly({(0, n): (-1) ** ((n + 1) // 2 - 1)}) if n % 2 else BiPoly()
            expect_equal(_parity_sum(n, t.sin), rhs, n=n)

    return run_check(chk, body)


@register("appell-derivative")
def check_appell(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact(
        "appell-derivative",
        "d/dx D_n = n D_{n-1}; d/dx Dc_n = n Dc_{n-1}; d/dx Ds_n = n Ds_{n-1}; "
        "Dc_0 = 1, Ds_0 = 0, Dc_n(x,0) = D_n(x)",
        {"n_max": cfg.n_max},
    )

    def body():
        expect_equal(t.cos(0), BiPoly.constant(1), n=0, side="cosine initial value")
        expect_equal(t.sin(0), BiPoly(), n=0, side="sine initial value")
        expect_equal(t.dpoly(0), Poly([1]), n=0, side="D_0(x)")
        for n in range(1, cfg.n_max + 1):
            expect_equal(t.dpoly(n).derivative(), t.dpoly(n - 1) * n, n=n, side="D_n")
            expect_equal(t.cos(n).partial_x(), t.cos(n - 1) * n, n=n, side="cosine")
            expect_equal(t.sin(n).partial_x(), t.sin(n - 1) * n, n=n, side="sine")
            expect_equal(t.cos(n).as_poly_in_x_at_y(0), t.dpoly(n), n=n, side="cosine at y=0")

    return run_check(chk, body)


@register("trig-parity")
def check_trig_parity(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    chk = _exact("trig-parity", "Dc_n(x,-y) = Dc_n(x,y); Ds_n(x,-y) = -Ds_n(x,y)", {"n_max": cfg.n_max})

    def body():
        for n in range(cfg.n_max + 1):
            expect_equal(t.cos(n).reflect_y(), t.cos(n), n=n, side="cosine")
            expect_equal(t.sin(n).reflect_y(), -t.sin(n), n=n, side="sine")

    return run_check(chk, body)


def _shift_check(check_id: str, family_name: str, cfg: VerifyConfig, family: Callable[[int], BiPoly]):
    chk = _exact(
        check_id,
        f"{family_name}_n(x+r,y) = sum_l C(n,l) {family_name}_l(x,y) r^(n-l)",
        {"n_max": cfg.n_max, "r_max": cfg.r_max},
    )

    def body():
        for r in range(cfg.r_max + 1):
            for n in range(cfg.n_max + 1):
                rhs = BiPoly()
                for l in range(n + 1):
                    rhs = rhs + family(l) * (binomial(n, l) * r ** (n - l))
                expect_equal(family(n).compose_x_affine(1, r), rhs, n=n, r=r)

    return run_check(chk, body)


@register("cosine-shift")
def check_cosine_shift(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    return _shift_check("cosine-shift", "Dc", cfg, t.cos)


@register("sine-shift")
def check_sine_shift(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    return _shift_check("sine-shift", "Ds", cfg, t.sin)


def _aggregate(check_id: str, statement: str, params: dict, reports) -> IdentityReport:
    chk = _exact(check_id, statement, params, Mode.EXACT_POINT)

    def body():
        for rep in reports:
            if rep.status is Status.FAIL:
                raise Mismatch(**rep.witness)

    return run_check(chk, body)


@register("moment-plain")
def check_moment_plain(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    reports = (
        moment_identity_exact(p, n) for p in cfg.grid for n in range(cfg.moment_n_max + 1)
    )
    return _aggregate(
        "moment-plain",
        "E[(X-1+p)^n] = D_n(p) for X ~ Gamma(1,1)",
        {"n_max": cfg.moment_n_max, "p": list(cfg.grid)},
        reports,
    )


@register("moment-trig")
def check_moment_trig(cfg: VerifyConfig, t: Tables) -> IdentityReport:
    reports = (
        trig_moment_identity_exact(p, q, n)
        for p in cfg.trig_grid
        for q in cfg.trig_grid
        for n in range(cfg.trig_moment_n_max + 1)
    )
    return _aggregate(
        "moment-trig",
        "Re/Im of E[(X-1+p+iq)^n] = cosine/sine polynomial at (p,q)",
        {"n_max": cfg.trig_moment_n_max, "grid": list(cfg.trig_grid)},
        reports,
    )


def check_ids() -> list[str]:
    return sorted(REGISTRY)


def run_all(
    config: VerifyConfig | Mapping | None = None,
    only: Sequence[str] | None = None,
    tables: Tables | None = None,
) -> list[IdentityReport]:
    """Run registered checks (all, or those in ``only``), sorted by id."""
    if config is None:
        raise ValueError("missing n_max")
    if not isinstance(config, VerifyConfig):
        config = VerifyConfig.from_mapping(config)
    ids = check_ids() if not only else sorted(only)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    needed = max(config.n_max, config.tail_terms, config.composition_n_max) + 1
    tables = tables or Tables(n_max=needed)
    if tables.n_max < needed:
        raise ValueError(f"derangement table needs at least {needed + 1} entries")
    return [REGISTRY[i](config, tables) for i in ids]


def all_passed(reports: Sequence[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
