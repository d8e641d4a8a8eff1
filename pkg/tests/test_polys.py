import math

import pytest
from hypothesis import given, settings, strategies as st

from derangements.exact import BiPoly, GaussianRational, Poly
from derangements.polys import (
    ConsistencyError,
    cosine_derangement,
    derangement_complex_eval,
    derangement_poly,
    fixed_point_enumerator,
    sine_derangement,
    sine_double_sum,
    trig_complex_pair,
)
from derangements.sequences import OracleTooLarge, derangement_number
from derangements.series import derangement_egf, trig_derangement_egf

from conftest import F, small_rationals

x, y = BiPoly.x(), BiPoly.y()


def test_small_derangement_polys():
    assert derangement_poly(0).poly == Poly([1])
    assert derangement_poly(1).poly == Poly([0, 1])
    assert derangement_poly(3).poly == Poly([2, 3, 0, 1])
    assert derangement_poly(4).poly(0) == 9
    assert derangement_poly(4).poly(2) == 65
    assert derangement_poly(5).poly(F(-1, 2)) == F(807, 32)


@pytest.mark.parametrize("n", range(31))
def test_derangement_poly_shape(n):
    p = derangement_poly(n).poly
    assert p.degree == n
    assert p.leading() == 1
    assert p.coeff(0) == derangement_number(n)
    assert p(1) == math.factorial(n)


@pytest.mark.parametrize("n", range(9))
def test_fixed_point_enumerator(n):
    assert fixed_point_enumerator(n) == derangement_poly(n).poly


def test_fixed_point_enumerator_small():
    assert fixed_point_enumerator(0) == Poly([1])
    assert fixed_point_enumerator(2) == Poly([1, 0, 1])
    assert fixed_point_enumerator(3) == Poly([2, 3, 0, 1])
    with pytest.raises(OracleTooLarge):
        fixed_point_enumerator(9)


def test_trig_small_cases():
    # independently expanded from the generating functions
    cos_expected = [
        BiPoly.constant(1),
        x,
        x**2 - y**2 + 1,
        x**3 - 3 * x * y**2 + 3 * x + 2,
        x**4 - 6 * x**2 * y**2 + 6 * x**2 + 8 * x + y**4 - 6 * y**2 + 9,
    ]
    sin_expected = [
        BiPoly(),
        y,
        2 * x * y,
        3 * x**2 * y - y**3 + 3 * y,
        4 * x**3 * y - 4 * x * y**3 + 12 * x * y + 8 * y,
    ]
    for n in range(5):
        assert cosine_derangement(n).poly == cos_expected[n]
        assert sine_derangement(n).poly == sin_expected[n]


def test_sine_double_sum_needs_alternating_sign():
    # without (-1)^m the y^3 term of n=3 would come out as +y^3
    assert sine_double_sum(3, [1, 0, 1, 2]).coeff(0, 3) == -1


def test_complex_pair_has_no_imaginary_remainder():
    for n in range(12):
        trig_complex_pair(n)


def test_complex_eval_examples():
    assert derangement_complex_eval(2, GaussianRational(0, 1)) == 0
    assert cosine_derangement(2).poly.eval(0, 1) == 0
    assert sine_derangement(2).poly.eval(0, 1) == 0
    p, q = F(2, 3), F(-5, 4)
    assert derangement_complex_eval(1, GaussianRational(p, q)) == GaussianRational(p, q)
    assert derangement_complex_eval(6, F(3, 5)) == derangement_poly(6).poly(F(3, 5))


GRID = [F(-2), F(-1, 3), F(0), F(1, 2), F(3)]


@pytest.mark.parametrize("n", range(0, 21, 4))
def test_real_and_imaginary_parts(n):
    c, s = cosine_derangement(n).poly, sine_derangement(n).poly
    for a in GRID:
        for b in GRID:
            plus = derangement_complex_eval(n, GaussianRational(a, b))
            minus = derangement_complex_eval(n, GaussianRational(a, -b))
            assert (plus + minus) / 2 == c.eval(a, b)
            assert (plus - minus) / GaussianRational(0, 2) == s.eval(a, b)
            assert plus == GaussianRational(c.eval(a, b), s.eval(a, b))


@pytest.mark.parametrize("n", range(21))
def test_parity_in_y(n):
    c, s = cosine_derangement(n).poly, sine_derangement(n).poly
    assert c.reflect_y() == c
    assert s.reflect_y() == -s
    assert c.as_poly_in_x_at_y(0) == derangement_poly(n).poly
    assert s.as_poly_in_x_at_y(0) == Poly()


@pytest.mark.parametrize("n", range(1, 26))
def test_appell(n):
    assert derangement_poly(n).poly.derivative() == derangement_poly(n - 1).poly * n
    assert cosine_derangement(n).poly.partial_x() == cosine_derangement(n - 1).poly * n
    assert sine_derangement(n).poly.partial_x() == sine_derangement(n - 1).poly * n


@pytest.mark.parametrize("y_val", [F(2, 3), F(-1), F(0)])
def test_generating_function_oracle(y_val):
    order = 20
    for x_val in (F(3, 7), F(-2), F(1, 2)):
        base = derangement_egf(order, x_val).egf()
        cos_s, sin_s = trig_derangement_egf(order, x_val, y_val)
        for n in range(order + 1):
            assert base[n] == derangement_poly(n).poly(x_val)
            assert cos_s.egf()[n] == cosine_derangement(n).poly.eval(x_val, y_val)
            assert sin_s.egf()[n] == sine_derangement(n).poly.eval(x_val, y_val)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 12), small_rationals, small_rationals)
def test_complex_eval_property(n, a, b):
    z = derangement_complex_eval(n, GaussianRational(a, b))
    assert z.re == cosine_derangement(n).poly.eval(a, b)
    assert z.im == sine_derangement(n).poly.eval(a, b)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        derangement_poly(-1)


def test_consistency_error_is_runtime_error():
    assert issubclass(ConsistencyError, RuntimeError)
