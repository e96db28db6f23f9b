from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscy.series import (
    LogSeries,
    PowerSeries,
    TruncationError,
    VariableMismatch,
    series_compose,
    series_exp,
    series_from_json,
    series_log,
    series_revert,
    series_to_json,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


def series(var="z", trunc=10, constant=None):
    coeffs = st.lists(rationals, min_size=trunc + 1, max_size=trunc + 1)
    if constant is None:
        return coeffs.map(lambda c: PowerSeries(var, tuple(c)))
    return coeffs.map(lambda c: PowerSeries(var, (Q(constant),) + tuple(c[1:])))


def test_basic_arithmetic():
    f = PowerSeries("z", (1, 2, 3))
    g = PowerSeries("z", (0, 1, 0))
    assert (f + g).coeffs == (Q(1), Q(3), Q(3))
    assert (f - g).coeffs == (Q(1), Q(1), Q(3))
    assert (f * g).coeffs == (Q(0), Q(1), Q(2))
    assert (2 * f).coeffs == (Q(2), Q(4), Q(6))
    assert (f + 1).coeffs == (Q(2), Q(2), Q(3))


def test_min_truncation():
    f = PowerSeries("z", (1, 2, 3, 4, 5))
    g = PowerSeries("z", (1, 1))
    assert (f + g).trunc == 1
    assert (f * g).trunc == 1


def test_getitem_beyond_truncation_raises():
    f = PowerSeries("z", (1, 2))
    assert f[1] == 2
    with pytest.raises(TruncationError):
        f[2]


def test_truncate_cannot_extend():
    f = PowerSeries("z", (1, 2))
    with pytest.raises(TruncationError):
        f.truncate(5)


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        PowerSeries("z", (1,)) + PowerSeries("q", (1,))


def test_shift_theta_deriv_integrate():
    f = PowerSeries("z", (1, 2, 3))
    assert f.shift(1).coeffs == (Q(0), Q(1), Q(2))
    assert f.theta().coeffs == (Q(0), Q(2), Q(6))
    assert f.deriv().coeffs == (Q(2), Q(6))
    assert f.deriv().trunc == f.trunc - 1
    assert f.integrate0().coeffs == (Q(0), Q(1), Q(1), Q(1))
    assert f.integrate0().trunc == f.trunc + 1


def test_reciprocal_and_division():
    f = PowerSeries("z", (1, -1, 0, 0))
    assert f.reciprocal().coeffs == (Q(1), Q(1), Q(1), Q(1))
    assert (f / f).coeffs == (Q(1), Q(0), Q(0), Q(0))
    with pytest.raises(ValueError):
        PowerSeries("z", (0, 1)).reciprocal()


def test_exp_log_known_values():
    z = PowerSeries.gen("z", 4)
    e = series_exp(z)
    assert e.coeffs == (Q(1), Q(1), Q(1, 2), Q(1, 6), Q(1, 24))
    l = series_log(1 + z)
    assert l.coeffs == (Q(0), Q(1), Q(-1, 2), Q(1, 3), Q(-1, 4))


def test_compose_and_revert_known():
    # revert of z/(1-z) is z/(1+z)
    f = PowerSeries("z", (0, 1, 1, 1, 1, 1))
    g = series_revert(f)
    assert g.coeffs == (Q(0), Q(1), Q(-1), Q(1), Q(-1), Q(1))


@settings(max_examples=200)
@given(series(constant=0))
def test_log_exp_roundtrip(f):
    assert series_log(series_exp(f)) == f


@settings(max_examples=200)
@given(series(constant=1))
def test_exp_log_roundtrip(f):
    assert series_exp(series_log(f)) == f


@settings(max_examples=200)
@given(series(constant=0), st.fractions(min_value=-20, max_value=20, max_denominator=10).filter(lambda x: x != 0))
def test_revert_roundtrip(f, lead):
    f = PowerSeries(f.var, (Q(0), lead) + f.coeffs[2:])
    g = series_revert(f)
    assert series_compose(f, g) == PowerSeries.gen(f.var, f.trunc)
    assert series_compose(g, f) == PowerSeries.gen(f.var, f.trunc)


@settings(max_examples=200)
@given(series(constant=1), series(constant=1))
def test_reciprocal_is_multiplicative_inverse(f, g):
    assert (f * f.reciprocal()) == PowerSeries.one(f.var, f.trunc)
    assert ((f * g) * (f.reciprocal() * g.reciprocal())) == PowerSeries.one(f.var, f.trunc)


def test_json_roundtrip():
    f = PowerSeries("z", (Q(1), Q(-3, 7)))
    assert series_from_json(series_to_json(f)) == f


# -- LogSeries ---------------------------------------------------------------


def test_log_series_theta_rule():
    # F = log z (component convention: f_j L^j / j!)
    one = PowerSeries.one("z", 5)
    zero = PowerSeries.zero("z", 5)
    F = LogSeries((zero, one))
    t = F.theta()
    assert t.component(0) == one
    assert t.log_degree == 0


def test_log_series_theta_product_rule():
    f = PowerSeries("z", (0, 1, 2, 3))
    F = LogSeries((f, f))  # f + f log z
    t = F.theta()
    assert t.component(0) == f.theta() + f
    assert t.component(1) == f.theta()


def test_log_series_mul_binomial_rule():
    one = PowerSeries.one("z", 3)
    zero = PowerSeries.zero("z", 3)
    L = LogSeries((zero, one))  # log z
    L2 = L * L  # (log z)^2 = 2 * L^2/2!
    assert L2.component(2) == 2 * one
    L3 = L2 * L
    assert L3.component(3) == 6 * one


def test_log_series_top_trim():
    zero = PowerSeries.zero("z", 3)
    one = PowerSeries.one("z", 3)
    F = LogSeries((one, zero, zero))
    assert F.log_degree == 0


def test_compose_inner_consistency():
    # substitute z = q (identity with log_corr = 0): must be unchanged
    f = PowerSeries("z", (1, 2, 3, 4, 5))
    F = LogSeries((f, f))
    zq = PowerSeries.gen("q", 4)
    out = F.compose_inner(zq, PowerSeries.zero("q", 4))
    assert out.component(0).coeffs == f.coeffs[:5]
    assert out.component(1).coeffs == f.coeffs[:5]
