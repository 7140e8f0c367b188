import json
import math
import os

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanoloop import airy_eval
from nanoloop.errors import NaNError, RangeError

from oracles import airy_maclaurin

ORACLE = os.path.join(os.path.dirname(__file__), "data", "airy_oracle.json")


def _oracle_rows():
    with open(ORACLE, encoding="utf-8") as fh:
        data = json.load(fh)
    return [(float(r[0]), [float(mpmath.mpf(v)) for v in r[1:]]) for r in data["rows"]]


def test_values_at_zero():
    q = airy_eval(0.0)
    ai0 = 3 ** (-2 / 3) / math.gamma(2 / 3)
    aip0 = -(3 ** (-1 / 3)) / math.gamma(1 / 3)
    assert q.ai == pytest.approx(ai0, rel=1e-15)
    assert q.ai_prime == pytest.approx(aip0, rel=1e-15)
    assert q.bi == pytest.approx(math.sqrt(3) * ai0, rel=1e-15)
    assert q.bi_prime == pytest.approx(-math.sqrt(3) * aip0, rel=1e-15)


def test_frozen_oracle_is_consistent_with_live_series():
    rows = _oracle_rows()
    for x, ref in rows[::250]:
        live = [float(v) for v in airy_maclaurin(mpmath.mpf(x))]
        assert live == pytest.approx(ref, rel=1e-15)


def test_grid_against_oracle():
    worst = 0.0
    for x, ref in _oracle_rows():
        got = airy_eval(x)
        worst = max(worst, max(abs(g - r) / abs(r) for g, r in zip(got, ref)))
    assert worst <= 1e-12


@pytest.mark.parametrize("x", [-99.5, -60.25, -30.0, -16.5, 16.5, 25.0, 60.0, 99.9])
def test_far_range_against_mpmath(x):
    with mpmath.workdps(40):
        ref = [mpmath.airyai(x), mpmath.airybi(x), mpmath.airyai(x, 1), mpmath.airybi(x, 1)]
    got = airy_eval(x)
    for g, r in zip(got, ref):
        assert abs(g - float(r)) <= 1e-12 * abs(float(r))


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
def test_wronskian(x):
    q = airy_eval(x)
    assert abs(q.ai * q.bi_prime - q.ai_prime * q.bi - 1 / math.pi) <= 1e-12 / math.pi * max(1.0, abs(q.ai * q.bi_prime))


@pytest.mark.parametrize("x", [-8.3, -2.1, -0.4, 0.0, 0.7, 3.3, 9.1])
def test_airy_ode_by_finite_difference(x):
    h = 1e-3
    for idx in (0, 1):
        f = [airy_eval(x + s * h)[idx] for s in (-1, 0, 1)]
        second = (f[0] - 2 * f[1] + f[2]) / h**2
        scale = max(1.0, abs(f[1]), abs(x * f[1]))
        assert abs(second - x * f[1]) <= 1e-6 * scale
    # the derivative columns really are derivatives
    q = airy_eval(x)
    assert (airy_eval(x + h).ai - airy_eval(x - h).ai) / (2 * h) == pytest.approx(q.ai_prime, rel=1e-5, abs=1e-9)


def test_monotonic_for_positive_argument():
    xs = np.linspace(0.0, 20.0, 401)
    ai = [airy_eval(x).ai for x in xs]
    bi = [airy_eval(x).bi for x in xs]
    assert all(a > b > 0 for a, b in zip(ai, ai[1:]))
    assert all(b2 > b1 > 0 for b1, b2 in zip(bi, bi[1:]))


@pytest.mark.parametrize("edge", [-16.0, 16.0])
def test_continuity_across_expansion_switch(edge):
    lo, hi = airy_eval(math.nextafter(edge, -math.inf)), airy_eval(math.nextafter(edge, math.inf))
    for a, b in zip(lo, hi):
        assert a == pytest.approx(b, rel=1e-13)


def test_errors():
    with pytest.raises(RangeError):
        airy_eval(100.5)
    with pytest.raises(RangeError):
        airy_eval(-1000.0)
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(NaNError):
            airy_eval(bad)


def test_deterministic():
    assert airy_eval(-3.217) == airy_eval(-3.217)
