import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from derangements.series import (
    SeriesError,
    TruncatedSeries,
    bell_egf,
    derangement_egf,
    egf_coefficient,
    series_compose,
    series_exp,
    series_exp_linear,
    series_log1p,
    series_trig,
)

from conftest import F, small_rationals

N = 10


def geometric(order):
    return TruncatedSeries.from_coeffs([1] * (order + 1), order)


def test_geometric_times_one_minus_t():
    s = TruncatedSeries.from_coeffs([1, -1], N) * geometric(N)
    assert s == TruncatedSeries.constant(1, N)


def test_self_division():
    a = TruncatedSeries.from_coeffs([2, 3, -1, F(1, 2)], N)
    assert a / a == TruncatedSeries.constant(1, N)


def test_derangement_egf_values():
    s = derangement_egf(N)
    assert s.egf()[:6] == [1, 0, 1, 2, 9, 44]
    assert egf_coefficient(s, 4) == 9


def test_derangement_egf_at_rational_point():
    # exp(-t) exp(3t/7) / (1-t), coefficient 3, independently expanded
    assert egf_coefficient(derangement_egf(N, F(3, 7)), 3) == F(1154, 343)


def test_exp_and_log():
    e = series_exp_linear(1, N)
    assert egf_coefficient(e, 5) == 1
    assert all(c == Fraction(1, math.factorial(n)) for n, c in enumerate(e.coeffs))
    assert series_log1p(e - 1) == TruncatedSeries.t(N)


def test_bell_series():
    assert bell_egf(6, 1).egf() == [1, 1, 2, 5, 15, 52, 203]
    assert bell_egf(5, F(1, 2)).egf() == [1, F(1, 2), F(3, 4), F(11, 8), F(49, 16), F(257, 32)]


def test_trig():
    cos, sin = series_trig(1, 4)
    assert cos.coeffs == (1, 0, F(-1, 2), 0, F(1, 24))
    assert series_trig(0, 6)[1] == TruncatedSeries.constant(0, 6)
    assert series_trig(2, 5)[1].coeffs[3] == F(-4, 3)


def test_errors():
    with pytest.raises(SeriesError, match="non-unit divisor"):
        TruncatedSeries.constant(1, 3) / TruncatedSeries.t(3)
    with pytest.raises(SeriesError, match="non-nilpotent argument"):
        series_exp(TruncatedSeries.constant(1, 3))
    with pytest.raises(SeriesError, match="non-nilpotent argument"):
        series_compose(geometric(3), geometric(3))
    with pytest.raises(SeriesError, match="beyond truncation"):
        egf_coefficient(geometric(3), 4)
    with pytest.raises(SeriesError, match="order mismatch"):
        geometric(3) + geometric(4)


def test_compose_geometric_with_t():
    assert series_compose(geometric(N), TruncatedSeries.t(N)) == geometric(N)


def test_json_roundtrip():
    s = derangement_egf(5, F(-2, 3))
    assert TruncatedSeries.from_json(s.to_json()) == s


nilpotent = st.lists(small_rationals, min_size=1, max_size=6).map(
    lambda cs: TruncatedSeries.from_coeffs([0] + cs, 6)
)
units = st.lists(small_rationals, min_size=1, max_size=6).filter(lambda cs: cs[0] != 0).map(
    lambda cs: TruncatedSeries.from_coeffs(cs, 6)
)


@settings(max_examples=40, deadline=None)
@given(nilpotent)
def test_exp_log_inverse(a):
    assert series_exp(series_log1p(a)) == 1 + a
    assert series_log1p(series_exp(a) - 1) == a


@settings(max_examples=40, deadline=None)
@given(units, units)
def test_mul_div_inverse(a, b):
    assert a * (b / a) == b


@given(small_rationals)
def test_pythagoras(y):
    cos, sin = series_trig(y, 8)
    assert cos * cos + sin * sin == TruncatedSeries.constant(1, 8)
