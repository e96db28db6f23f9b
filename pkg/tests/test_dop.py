from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscy.dop import (
    AmbiguousAnnihilator,
    DOp,
    NoAnnihilator,
    dop_from_json,
    dop_to_json,
    from_ddz_form,
    pf_fit,
    stirling2,
    to_ddz_form,
)
from grasscy.series import LogSeries, PowerSeries

D = DOp.D()
z = DOp.z()


def test_composition_rule():
    # D z = z (D + 1)
    assert D * z == DOp({(1, 1): 1, (1, 0): 1})
    # z D = z D
    assert z * D == DOp({(1, 1): 1})
    # D^2 z = z (D+1)^2
    assert D * D * z == DOp({(1, 2): 1, (1, 1): 2, (1, 0): 1})


def test_power_and_ring_axioms():
    A = D * z - z * D
    assert A == z  # [D, z] = z
    assert (D + z) ** 2 == D * D + D * z + z * D + z * z


def test_canonical_form():
    P = DOp({(0, 2): Q(-2, 3), (1, 0): Q(4, 3)})
    C = P.canonical()
    assert C == DOp({(0, 2): 1, (1, 0): -2})
    # idempotent
    assert C.canonical() == C


def test_indicial():
    P = D**4 - 16 * z * (2 * D + 1) ** 2 * (4 * D + 1) * (4 * D + 3)
    assert P.indicial(0) == 0
    assert P.indicial(2) == 16


def test_apply_power_series():
    f = PowerSeries("z", (1, 1, 1, 1))
    assert D.apply(f) == f.theta()
    assert z.apply(f) == f.shift(1)
    assert (D * z).apply(f) == f.shift(1).theta()


def test_apply_log_series_matches_theta():
    f = PowerSeries("z", (0, 1, 2, 3))
    F = LogSeries((f, f))
    assert D.apply(F) == F.theta()
    assert (D * D).apply(F) == F.theta().theta()
    assert (z * D).apply(F) == F.theta().shift(1)


def test_stirling_conversion_roundtrip():
    assert stirling2(4, 2) == 7
    P = D**3 - 2 * z * (D + 1) * (2 * D + 1)
    assert from_ddz_form(to_ddz_form(P)) == P


def test_ddz_form_theta():
    # D^2 = z d/dz + z^2 (d/dz)^2
    b = to_ddz_form(D * D)
    assert b[1] == [Q(0), Q(1)]
    assert b[2] == [Q(0), Q(0), Q(1)]


def test_pf_fit_geometric():
    # f = 1/(1-z): (1-z) f' - f = 0, i.e. D - z D - z annihilates it
    f = PowerSeries("z", (1,) * 30)
    P = pf_fit(f, 2, 2, guard=5)
    assert P.apply(f).is_zero()
    assert P.order == 1


def test_pf_fit_exp():
    from math import factorial

    f = PowerSeries("z", tuple(Q(1, factorial(m)) for m in range(30)))
    P = pf_fit(f, 2, 2, guard=5)
    assert P == (D - z).canonical()


def test_pf_fit_guard_insufficient_series():
    f = PowerSeries("z", (1,) * 5)
    with pytest.raises(ValueError):
        pf_fit(f, 4, 4, guard=10)


def test_pf_fit_no_annihilator():
    # a series whose minimal operator has order 2 is not matched at order 1
    # with z-degree 0
    from math import factorial

    f = PowerSeries("z", tuple(Q(factorial(2 * m), factorial(m) ** 2) for m in range(25)))
    with pytest.raises(NoAnnihilator):
        pf_fit(f, 1, 0, guard=5)


def test_json_roundtrip():
    P = D**4 - 3 * z * (2 * D + 1)
    assert dop_from_json(dop_to_json(P)) == P


ops = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
    ),
    min_size=1,
    max_size=4,
).map(lambda ts: DOp({(i, j): c for i, j, c in ts}))


@settings(max_examples=200)
@given(ops, ops)
def test_composition_agrees_with_series_action(A, B):
    f = PowerSeries("z", tuple(Q(m + 1, m * m + 1) for m in range(8)))
    assert (A * B).apply(f) == A.apply(B.apply(f))


@settings(max_examples=200)
@given(ops)
def test_ddz_roundtrip_random(P):
    assert from_ddz_form(to_ddz_form(P)) == P


@settings(max_examples=100)
@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=6),
)
def test_pf_fit_certificate(r, d, seed):
    """Build a series annihilated by a known MUM operator; pf_fit must return
    an operator that annihilates all guarded coefficients."""
    import random

    rng = random.Random(seed)
    terms = {(0, r): Q(1)}
    for i in range(1, d + 2):
        for j in range(r):
            terms[(i, j)] = Q(rng.randint(-4, 4))
    P = DOp(terms)
    if P.order != r:
        return
    # solve the recurrence for the normalized solution
    n = (r + 1) * (d + 2) + 12
    coeffs = [Q(1)]
    for m in range(1, n + 1):
        rhs = Q(0)
        for (i, j), c in P.terms.items():
            if i > 0 and m - i >= 0:
                rhs += c * Q(m - i) ** j * coeffs[m - i]
        coeffs.append(-rhs / Q(m) ** r)
    f = PowerSeries("z", tuple(coeffs))
    try:
        fit = pf_fit(f, r, d + 1, guard=10)
    except AmbiguousAnnihilator:
        return
    assert fit.apply(f).is_zero()
