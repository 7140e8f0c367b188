import math

import numpy as np
import pytest

from nanoloop import PICOMETRE_UNITS, RectParams, TriParams, derive_rect, derive_tri, potential_from_gamma
from nanoloop.errors import DomainError, MaxIterError, NoBracketError, NoRootInWindowError
from nanoloop.figures import TABLE_I, TABLE_I_PRE_BARRIER
from nanoloop.models import rect_determinant, shorted_tri_determinant, tri_determinant
from nanoloop.solver import (
    RootConfig,
    bisect_root,
    drive_sine,
    quasistatic_sweep,
    rect_free_function,
    scan_roots,
    solve_rect_fourth,
    solve_tri_theta,
    trace_rect_locus,
    trace_shorted_tri,
    trace_tri_locus,
)

E_GRID = [round(0.01 * i, 2) for i in range(1, 100)]


class Counter:
    def __init__(self, f):
        self.f, self.calls = f, 0

    def __call__(self, x):
        self.calls += 1
        return self.f(x)


def test_bisect_linear():
    assert bisect_root(lambda x: x - 1.0, 0.0, 2.0) == 1.0


def test_bisect_iteration_bound():
    f = Counter(lambda x: x - 0.3)
    x = bisect_root(f, 0.0, 1.0)
    assert abs(x - 0.3) <= 4 * np.finfo(float).eps
    floor = 4 * np.finfo(float).eps * 0.3  # machine-relative floor at the root
    assert f.calls <= 2 + math.ceil(math.log2(1.0 / floor))


def test_bisect_errors():
    with pytest.raises(NoBracketError):
        bisect_root(lambda x: x * x + 1.0, -1.0, 2.0)
    with pytest.raises(MaxIterError):
        bisect_root(lambda x: x - 0.3, 0.0, 1.0, RootConfig(max_iterations=3))


def test_bisect_is_deterministic():
    f = lambda x: math.cos(x) - x  # noqa: E731
    assert bisect_root(f, 0.0, 1.0) == bisect_root(f, 0.0, 1.0)


def test_root_config_validation():
    for bad in ({"abs_tolerance": 0.0}, {"max_iterations": 0}, {"bracket_scan_step": -1.0}, {"x_tolerance": -1.0}):
        with pytest.raises(DomainError):
            RootConfig(**bad)


def test_x_tolerance_stops_early():
    f = Counter(lambda x: x - 0.3)
    bisect_root(f, 0.0, 1.0, RootConfig(x_tolerance=1e-6, abs_tolerance=1e-3))
    assert f.calls < 30


def test_bisect_rect_determinant_in_b():
    a, E, V0 = -0.5, 0.1, 1.0
    f = rect_free_function("b", {"a": a, "E": E, "V0": V0})
    scan = scan_roots(f, 0.0, 5.0)
    assert scan.roots
    b = bisect_root(f, scan.roots[0] - 1e-3, scan.roots[0] + 1e-3)
    assert abs(rect_determinant(derive_rect(RectParams(a, b, E, V0)), a, b)) <= 1e-9


def test_equal_k_beta_has_no_root_in_b():
    # with k = beta the determinant is 4 k^2 [1 - cosh(kb) cos(ka)] > 0 when cos(ka) < 0
    with pytest.raises(NoRootInWindowError) as info:
        solve_rect_fourth({"a": -0.5, "E": 0.5, "V0": 1.0}, "b")
    assert info.value.extrema[0] > 0


def test_zero_length_barrier_touch_roots():
    E = 0.3
    k = derive_rect(RectParams(-1.0, 0.0, E, 1.0)).k
    roots = solve_rect_fourth({"b": 0.0, "E": E, "V0": 1.0}, "a")
    expected = sorted(-2 * math.pi * n / k for n in (1, 2))
    assert roots == pytest.approx(expected, rel=1e-7)
    # independent of V0
    assert solve_rect_fourth({"b": 0.0, "E": E, "V0": 3.0}, "a") == pytest.approx(expected, rel=1e-7)


def test_shorted_rect_has_no_root():
    with pytest.raises(NoRootInWindowError):
        solve_rect_fourth({"a": 0.0, "E": 0.4, "V0": 1.0}, "b")


@pytest.mark.parametrize("free,fixed", [
    ("a", {"b": 0.3, "E": 0.2, "V0": 1.0}),
    ("b", {"a": -0.8, "E": 0.15, "V0": 1.0}),
    ("E", {"a": -1.2, "b": 0.2, "V0": 1.0}),
    ("V0", {"a": -0.3, "b": 0.2, "E": 0.3}),
])
def test_solve_fourth_residuals(free, fixed):
    roots = solve_rect_fourth(fixed, free)
    assert roots == sorted(roots)
    for x in roots:
        vals = dict(fixed, **{free: x})
        d = derive_rect(RectParams(vals["a"], vals["b"], vals["E"], vals["V0"]))
        assert abs(rect_determinant(d, vals["a"], vals["b"])) <= 1e-9


def test_solve_fourth_validation():
    with pytest.raises(DomainError):
        solve_rect_fourth({"b": 0.3, "E": 0.2}, "a")
    with pytest.raises(DomainError):
        solve_rect_fourth({"b": 0.3, "E": 1.2, "V0": 1.0}, "a")
    with pytest.raises(DomainError):
        solve_rect_fourth({"a": 0.5, "E": 0.2, "V0": 1.0}, "b")


def test_rect_locus():
    loci = trace_rect_locus([0.0, 0.2], 1.0, E_GRID)
    for locus in loci:
        swept = [p.swept for p in locus.points]
        assert all(x < y for x, y in zip(swept, swept[1:]))
        for p in locus.points:
            d = derive_rect(RectParams(p.solved, locus.fixed["b"], p.swept, 1.0))
            assert abs(rect_determinant(d, p.solved, locus.fixed["b"])) <= 1e-9
    zero = loci[0]
    for p in zero.points:
        k = math.sqrt(derive_rect(RectParams(-1.0, 0.0, p.swept, 1.0)).k ** 2)
        assert (p.solved * k) % (2 * math.pi) == pytest.approx(0.0, abs=1e-6) or \
            (p.solved * k) % (2 * math.pi) == pytest.approx(2 * math.pi, abs=1e-6)


def test_rect_locus_refines_consistently():
    coarse = trace_rect_locus([0.3], 1.0, [0.2 + 0.02 * i for i in range(11)])[0]
    fine = trace_rect_locus([0.3], 1.0, [0.2 + 0.01 * i for i in range(21)])[0]
    fine_at = {round(p.swept, 6): p.solved for p in fine.points}
    for p in coarse.points:
        assert fine_at[round(p.swept, 6)] == p.solved


def test_tri_theta_roots():
    roots = solve_tri_theta(0.3, 1.0, 1.0)
    assert roots == sorted(roots, reverse=True)
    for t in roots:
        assert t < 0
        d = derive_tri(TriParams(0.3, 1.0, 1.0))
        assert abs(tri_determinant(d, t)) <= 1e-9
    with pytest.raises(DomainError):
        solve_tri_theta(0.3, 1.0, 1.0, window=(-1.0, 1.0))
    with pytest.raises(NoRootInWindowError):
        solve_tri_theta(0.3, 1.0, 1.0, window=(-1e-3, 0.0))


def test_tri_locus_sets():
    E_desc = E_GRID[::-1]
    loci, skipped = trace_tri_locus(1.0, [0.5, 1.0], E_desc)
    assert not skipped
    families = {(L.fixed["c"], L.fixed["family"]) for L in loci}
    assert families == {(0.5, 1), (0.5, -1), (1.0, 1), (1.0, -1)}
    for L in loci:
        Es = [p.swept for p in L.points]
        assert all(x > y for x, y in zip(Es, Es[1:]))
        for p in L.points:
            d = derive_tri(TriParams(p.swept, 1.0, L.fixed["c"], p.solved))
            assert abs(tri_determinant(d)) <= 1e-9
        steps = np.abs(np.diff([p.solved for p in L.points]))
        # steps in a are far larger at the bottom (E -> 0) than at the top
        assert steps[-1] > 10 * steps[0]


def test_shorted_tri_mapping():
    ratios = [j / 17 for j in range(1, 17)]
    roots, skipped = trace_shorted_tri(ratios, cfg=RootConfig(bracket_scan_step=0.01))
    assert roots and all(r.ratio < 0.85 for r in roots)
    assert {round(r, 12) for r, _ in skipped} == {round(j / 17, 12) for j in (14, 15, 16)}
    for r in roots:
        assert r.V0 / r.E == pytest.approx(1 - r.K / r.X, rel=1e-12)
        assert r.gamma_c == pytest.approx(r.X - r.K, rel=1e-12)
        assert r.V0 == pytest.approx(potential_from_gamma(r.gamma, r.c), rel=1e-15)
        assert r.b == (1 - r.E / r.V0) * r.c
        assert abs(r.residual) <= 1e-9
        assert abs(shorted_tri_determinant(1 / math.sqrt(r.X), r.K, r.X)) <= 1e-9


def test_drive_sine_symmetry():
    n = 64
    for j in range(n):
        mirror = (n // 2 - j) % n
        assert drive_sine(j, n) == drive_sine(mirror, n)
        assert drive_sine(j, n) == pytest.approx(math.sin(2 * math.pi * j / n), abs=1e-15)
    assert drive_sine(0, n) == 0.0 and drive_sine(16, n) == 1.0 and drive_sine(48, n) == -1.0


def test_quasistatic_sweep_physical():
    trace = quasistatic_sweep(0.25, 0.25, 1.0, 0.5, 64)
    assert trace.complete and len(trace.samples) == 64
    for j, s in enumerate(trace.samples):
        assert s.V == 1.0 + 0.5 * drive_sine(j, 64)
        d = derive_rect(RectParams(-0.25, s.b, 0.25, s.V))
        assert abs(rect_determinant(d, -0.25, s.b)) <= 1e-9
        mirror = trace.samples[(32 - j) % 64]
        assert mirror.b == s.b


def test_quasistatic_sweep_partial():
    trace = quasistatic_sweep(0.25, 0.5, 1.0, 0.5, 64, constants=PICOMETRE_UNITS, coordinate_sign=1)
    assert not trace.complete
    assert "no tunneling barrier" in trace.diagnostic
    assert len(trace.samples) == 48  # stops where V0 + V1 sin(wt) reaches E
    lost = quasistatic_sweep(1.0, 0.25, 1.0, 0.5, 64)
    assert not lost.complete and lost.samples == [] and "no root for b" in lost.diagnostic


def test_quasistatic_sweep_errors():
    with pytest.raises(DomainError):
        quasistatic_sweep(0.25, 0.2, 1.0, 1.0, 64)
    with pytest.raises(DomainError):
        quasistatic_sweep(0.25, 0.2, 1.0, 0.5, 3)
    with pytest.raises(DomainError):
        quasistatic_sweep(-0.25, 0.2, 1.0, 0.5, 64)


def test_table_reproduced_in_picometre_units():
    for a, ref in zip(TABLE_I_PRE_BARRIER, TABLE_I):
        trace = quasistatic_sweep(a, 0.1, 1.0, 0.5, 64, constants=PICOMETRE_UNITS, coordinate_sign=1)
        lo, mid, hi = trace.extrema()
        assert max(abs(lo - ref[0]), abs(mid - ref[1]), abs(hi - ref[2])) <= 1e-9
        assert abs(mid - (lo + hi) / 2) <= 1e-9
