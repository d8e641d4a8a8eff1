"""Base sequences: derangement, Stirling, Bell and Euler numbers."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Poly
from .series import egf_coefficient, euler_egf

BRUTE_FORCE_CAP = 9


class OracleTooLarge(ValueError):
    pass


class SequenceKind(enum.Enum):
    DERANGEMENT = "derangement"
    BELL = "bell"
    EULER = "euler"
    FACTORIAL = "factorial"


class StirlingKind(enum.Enum):
    FIRST_SIGNED = "stirling1"
    SECOND = "stirling2"


@dataclass(frozen=True)
class SequenceTable:
    kind: SequenceKind
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class StirlingTriangle:
    kind: StirlingKind
    rows: tuple[tuple[int, ...], ...]


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(k: int, parts) -> int:
    parts = list(parts)
    if sum(parts) != k or any(p < 0 for p in parts):
        raise ValueError("composition mismatch")
    out = math.factorial(k)
    for p in parts:
        out //= math.factorial(p)
    return out


def derangement_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _derangements(n)[n]


@lru_cache(maxsize=None)
def _derangements(n: int) -> tuple[int, ...]:
    vals = [1]
    for k in range(1, n + 1):
        vals.append(k * vals[-1] + (-1) ** k)
    return tuple(vals)


def derangement_numbers(n_max: int) -> list[int]:
    return list(_derangements(n_max))


def derangement_alternating_sum(n: int) -> int:
    """``sum_k C(n,k) (n-k)! (-1)^k``."""
    return sum(binomial(n, k) * math.factorial(n - k) * (-1) ** k for k in range(n + 1))


def derangement_factorial_sum(n: int) -> Fraction:
    """``n! sum_k (-1)^k / k!``."""
    return math.factorial(n) * sum(Fraction((-1) ** k, math.factorial(k)) for k in range(n + 1))


def brute_force_derangements(n: int) -> int:
    """Count fixed-point-free permutations of ``range(n)`` by enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > BRUTE_FORCE_CAP:
        raise OracleTooLarge("oracle too large")
    return sum(
        all(p != i for i, p in enumerate(perm))
        for perm in itertools.permutations(range(n))
    )


@lru_cache(maxsize=None)
def _stirling1_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # s(n+1, k) = s(n, k-1) - n s(n, k)
    rows = [(1,)]
    for m in range(n):
        prev = rows[-1]
        row = [0] * (m + 2)
        for k in range(m + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= m else 0
            row[k] = left - m * here
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _stirling2_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # S(n+1, k) = k S(n, k) + S(n, k-1)
    rows = [(1,)]
    for m in range(n):
        prev = rows[-1]
        row = [0] * (m + 2)
        for k in range(m + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= m else 0
            row[k] = k * here + left
        rows.append(tuple(row))
    return tuple(rows)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind; 0 when ``k > n`` or ``k < 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return _stirling1_rows(n)[n][k]


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind; 0 when ``k > n`` or ``k < 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return _stirling2_rows(n)[n][k]


def stirling_triangle(kind: StirlingKind | str, n_max: int) -> StirlingTriangle:
    kind = StirlingKind(kind)
    rows = _stirling1_rows(n_max) if kind is StirlingKind.FIRST_SIGNED else _stirling2_rows(n_max)
    return StirlingTriangle(kind, rows)


def falling_factorial(n: int) -> Poly:
    """``x (x-1) ... (x-n+1)`` as a polynomial."""
    out = Poly([1])
    for k in range(n):
        out = out * Poly([-k, 1])
    return out


@lru_cache(maxsize=None)
def bell_polynomial(n: int) -> Poly:
    """``Bel_n(x) = sum_k S2(n, k) x^k``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Poly(stirling_second(n, k) for k in range(n + 1))


def bell_number(n: int) -> int:
    value = bell_polynomial(n)(1)
    return int(value)


@lru_cache(maxsize=None)
def _euler_table(n: int) -> tuple[Fraction, ...]:
    s = euler_egf(n)
    return tuple(egf_coefficient(s, k) for k in range(n + 1))


def euler_number(n: int) -> Fraction:
    """``n!`` times coefficient ``n`` of ``2 / (e^t + 1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _euler_table(max(n, 1))[n]


def sequence_table(kind: SequenceKind | str, n_max: int) -> SequenceTable:
    kind = SequenceKind(kind)
    if kind is SequenceKind.DERANGEMENT:
        vals = derangement_numbers(n_max)
    elif kind is SequenceKind.BELL:
        vals = [bell_number(n) for n in range(n_max + 1)]
    elif kind is SequenceKind.EULER:
        vals = list(_euler_table(max(n_max, 1))[: n_max + 1])
    else:
        vals = [math.factorial(n) for n in range(n_max + 1)]
    return SequenceTable(kind, tuple(Fraction(v) for v in vals))
