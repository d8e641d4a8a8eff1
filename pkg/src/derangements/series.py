"""Truncated power series over the rationals.

A ``TruncatedSeries`` of order ``N`` holds the ordinary coefficients
``c_0 .. c_N`` of ``sum c_n t^n``.  Exponential-generating-function values
are read back with :func:`egf_coefficient` (``n! * c_n``).  Two series of
different orders never combine silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Scalar, as_rational, rational_to_str


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError("order must be non-negative")
        cs = tuple(as_rational(c) for c in self.coeffs)
        if len(cs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    # construction

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def from_egf(cls, values: Sequence[Scalar], order: int) -> "TruncatedSeries":
        """Series whose EGF coefficients are ``values``."""
        return cls.from_coeffs(
            (as_rational(v) / math.factorial(n) for n, v in enumerate(values[: order + 1])),
            order,
        )

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def t(cls, order: int, scale: Scalar = 1) -> "TruncatedSeries":
        """The series ``scale * t``."""
        return cls.from_coeffs([0, scale], order)

    # arithmetic

    def _check(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"cannot combine series with {type(other).__name__}")
        if other.order != self.order:
            raise SeriesError(
                f"order mismatch: {self.order} vs {other.order}"
            )
        return other

    def __add__(self, other):
        o = self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(a * other for a in self.coeffs))
        return series_mul(self, self._check(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(a / other for a in self.coeffs))
        return series_div(self, self._check(other))

    def __rtruediv__(self, other):
        return series_div(self._check(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def egf(self) -> list[Fraction]:
        return [math.factorial(n) * c for n, c in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [rational_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        return cls(int(data["order"]), tuple(Fraction(c) for c in data["coeffs"]))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    b = a._check(b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(n, tuple(out))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    b = a._check(b)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise SeriesError("non-unit divisor")
    out: list[Fraction] = []
    for k in range(a.order + 1):
        acc = a.coeffs[k] - sum(out[i] * b.coeffs[k - i] for i in range(k))
        out.append(acc / b0)
    return TruncatedSeries(a.order, tuple(out))


def _require_nilpotent(a: TruncatedSeries) -> None:
    if a.coeffs[0] != 0:
        raise SeriesError("non-nilpotent argument")


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for ``a(0) = 0``, via ``n b_n = sum_k k a_k b_{n-k}``."""
    _require_nilpotent(a)
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = sum(k * a.coeffs[k] * b[n - k] for k in range(1, n + 1))
        b.append(acc / n)
    return TruncatedSeries(a.order, tuple(b))


def series_log1p(a: TruncatedSeries) -> TruncatedSeries:
    """``log(1 + a)`` for ``a(0) = 0``, integrating ``a' / (1 + a)``."""
    _require_nilpotent(a)
    n = a.order
    deriv = TruncatedSeries.from_coeffs(
        [k * a.coeffs[k] for k in range(1, n + 1)], n
    )
    q = series_div(deriv, 1 + a)
    return TruncatedSeries.from_coeffs(
        [0] + [q.coeffs[k] / (k + 1) for k in range(n)], n
    )


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))`` by Horner nesting; needs ``inner(0) = 0``."""
    inner = outer._check(inner)
    _require_nilpotent(inner)
    acc = TruncatedSeries.constant(0, outer.order)
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def series_trig(y: Scalar, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Return ``(cos(y t), sin(y t))`` truncated at ``order``."""
    y = as_rational(y)
    cos_c, sin_c = [], []
    for n in range(order + 1):
        term = y**n / math.factorial(n)
        if n % 2 == 0:
            cos_c.append(term if n % 4 == 0 else -term)
            sin_c.append(0)
        else:
            cos_c.append(0)
            sin_c.append(term if n % 4 == 1 else -term)
    return TruncatedSeries(order, tuple(cos_c)), TruncatedSeries(order, tuple(sin_c))


def series_exp_linear(scale: Scalar, order: int) -> TruncatedSeries:
    """``exp(scale * t)``."""
    return series_exp(TruncatedSeries.t(order, scale))


def egf_coefficient(a: TruncatedSeries, n: int) -> Fraction:
    if n < 0:
        raise SeriesError("negative index")
    if n > a.order:
        raise SeriesError("beyond truncation")
    return math.factorial(n) * a.coeffs[n]


# Generating functions used across the package.


def derangement_egf(order: int, x: Scalar = 0) -> TruncatedSeries:
    """``exp(-t) exp(x t) / (1 - t)``."""
    one_minus_t = TruncatedSeries.from_coeffs([1, -1], order)
    return series_exp_linear(as_rational(x) - 1, order) / one_minus_t


def bell_egf(order: int, x: Scalar = 1) -> TruncatedSeries:
    """``exp(x (e^t - 1))``."""
    e_minus_1 = series_exp_linear(1, order) - 1
    return series_exp(e_minus_1 * as_rational(x))


def euler_egf(order: int) -> TruncatedSeries:
    """``2 / (e^t + 1)``."""
    return TruncatedSeries.constant(2, order) / (series_exp_linear(1, order) + 1)


def trig_derangement_egf(order: int, x: Scalar, y: Scalar) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``exp(-t) exp(x t) / (1 - t)`` times ``cos(y t)`` and ``sin(y t)``."""
    base = derangement_egf(order, x)
    cos_s, sin_s = series_trig(y, order)
    return base * cos_s, base * sin_s
