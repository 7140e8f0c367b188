import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanoloop import RectParams, derive_rect
from nanoloop.errors import DomainError, NotASolutionError, SingularityError
from nanoloop.models import (
    rect_coefficients,
    rect_coefficients_closed_form,
    rect_det_kernel,
    rect_determinant,
    rect_matrix,
    rect_wavefunction,
    shorted_rect_check,
)
from nanoloop.solver import solve_rect_fourth

from oracles import lu_det, rect_boundary_matrix


def _d(a, b, E, V0):
    return derive_rect(RectParams(a, b, E, V0))


params = st.tuples(
    st.floats(-5.0, -0.01), st.floats(0.0, 3.0), st.floats(0.01, 0.99), st.floats(0.1, 5.0)
).map(lambda t: (t[0], t[1], t[2] * t[3], t[3]))


@settings(max_examples=200, deadline=None)
@given(params)
def test_closed_form_matches_lu(p):
    a, b, E, V0 = p
    d = _d(a, b, E, V0)
    det = rect_determinant(d, a, b)
    lu = np.linalg.det(rect_matrix(d, a, b))
    assert det == pytest.approx(lu, rel=1e-10, abs=1e-300)


@settings(max_examples=100, deadline=None)
@given(params)
def test_matrix_encodes_the_boundary_conditions(p):
    # an independently assembled system has the same determinant up to orientation
    a, b, E, V0 = p
    d = _d(a, b, E, V0)
    ref = lu_det(rect_boundary_matrix(d.k, d.beta, a, b))
    assert rect_determinant(d, a, b) == pytest.approx(-ref, rel=1e-10, abs=1e-300)


def test_kernel_broadcasts():
    d = _d(-0.5, 0.3, 0.4, 1.0)
    bs = np.linspace(0.0, 2.0, 7)
    vec = rect_det_kernel(d.k, d.beta, -0.5, bs)
    assert vec.shape == bs.shape
    for b, v in zip(bs, vec):
        assert v == rect_determinant(d, -0.5, float(b))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zero_length_barrier_roots_at_full_turns(n):
    E, V0 = 0.3, 1.0
    k = _d(-1.0, 0.0, E, V0).k
    a = -2 * math.pi * n / k
    assert abs(rect_determinant(_d(a, 0.0, E, V0), a, 0.0)) < 1e-12
    # and strictly positive elsewhere: 4 k beta (1 - cos ka)
    d = _d(a / 2, 0.0, E, V0)
    assert rect_determinant(d, a * 0.37, 0.0) > 0


def test_shorted_check():
    d = _d(-1.0, 0.0, 0.4, 1.0)
    for b in (1e-3, 0.1, 1.0, 4.0):
        v = shorted_rect_check(d, b)
        assert v < 0
        assert v == pytest.approx(rect_determinant(d, 0.0, b) / 2, rel=1e-12)  # the a = 0 determinant, halved
    assert shorted_rect_check(d, 0.0) == 0.0


def _root(b=0.4, E=0.35, V0=1.0, pick=0):
    a = solve_rect_fourth({"b": b, "E": E, "V0": V0}, "a")[pick]
    return a, _d(a, b, E, V0)


def test_coefficients_at_root():
    a, d = _root()
    b = 0.4
    co = rect_coefficients(d, a, b)
    assert co.A == 1.0
    assert abs(co.C + co.D - 1.0) <= 1e-12
    assert np.abs(rect_matrix(d, a, b) @ co.as_array()).max() <= 1e-8
    # slope condition at the origin
    assert co.B * d.k == pytest.approx(d.beta * (co.C - co.D), rel=1e-9)


def test_wavefunction_continuity_and_closure():
    a, d = _root(b=0.7, E=0.6, V0=1.4, pick=-1)
    b = 0.7
    co = rect_coefficients(d, a, b)
    left, right = rect_wavefunction(co, d, 0.0, "I", a, b), rect_wavefunction(co, d, 0.0, "II", a, b)
    assert left.psi == pytest.approx(right.psi, abs=1e-9)
    assert left.psi_prime == pytest.approx(right.psi_prime, abs=1e-8)
    start, end = rect_wavefunction(co, d, a, "I", a, b), rect_wavefunction(co, d, b, "II", a, b)
    assert start.psi == pytest.approx(end.psi, abs=1e-8)
    assert start.psi_prime == pytest.approx(end.psi_prime, abs=1e-7)


@pytest.mark.parametrize("region,x", [("I", None), ("II", 0.2)])
def test_wavefunction_solves_schroedinger(region, x):
    a, d = _root()
    b = 0.4
    co = rect_coefficients(d, a, b)
    x = a / 2 if x is None else x
    h = 1e-4
    f = [rect_wavefunction(co, d, x + s * h, region, a, b).psi for s in (-1, 0, 1)]
    second = (f[0] - 2 * f[1] + f[2]) / h**2
    factor = -d.k**2 if region == "I" else d.beta**2
    assert second == pytest.approx(factor * f[1], rel=1e-5, abs=1e-5)


def test_wavefunction_domain():
    a, d = _root()
    co = rect_coefficients(d, a, 0.4)
    with pytest.raises(DomainError):
        rect_wavefunction(co, d, 0.1, "I", a, 0.4)
    with pytest.raises(DomainError):
        rect_wavefunction(co, d, 0.5, "II", a, 0.4)
    with pytest.raises(DomainError):
        rect_wavefunction(co, d, 0.1, "III", a, 0.4)


def test_coefficients_refuse_non_solutions():
    d = _d(-0.5, 0.4, 0.35, 1.0)
    with pytest.raises(NotASolutionError):
        rect_coefficients(d, -0.5, 0.4)
    with pytest.raises(DomainError):
        rect_coefficients(_d(-1.0, 0.0, 0.35, 1.0), -1.0, 0.0)


def test_closed_form_shortcut():
    # at k = beta the shortcut gives C = 1, D = 0
    d = _d(-0.3, 0.5, 0.5, 1.0)
    co = rect_coefficients_closed_form(d, -0.3, 0.5)
    assert (co.C, co.D) == (1.0, 0.0)
    # where the shortcut's B = 1 assumption holds it agrees with the consistent solve
    a, d = _root()
    full = rect_coefficients(d, a, 0.4)
    short = rect_coefficients_closed_form(d, a, 0.4)
    assert full.C + full.D == pytest.approx(short.C + short.D, abs=1e-12)
    k = d.k
    with pytest.raises(SingularityError):
        rect_coefficients_closed_form(_d(-math.pi / (2 * k), 0.4, 0.35, 1.0), -math.pi / (2 * k), 0.4)
