"""Solving one free parameter at a time and tracing solution loci."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError, NoRootInWindowError, SolverError
from ..models.rect import rect_det_kernel
from ..models.tri import shorted_tri_determinant, tri_theta_function, tri_theta_slope
from ..physics import CODATA_2018, PhysicalConstants, TriParams, derive_tri, potential_from_gamma, tunneling_length
from .roots import DEFAULT_CONFIG, RootConfig, scan_roots

RECT_PARAMETERS = ("a", "b", "E", "V0")


@dataclass(frozen=True)
class LocusPoint:
    swept: float
    solved: float
    residual: float
    branch_jump: bool = False


@dataclass
class SolutionLocus:
    model: str
    swept_name: str
    solved_name: str
    fixed: Dict[str, float]
    points: List[LocusPoint] = field(default_factory=list)
    skipped: List[Tuple[float, str]] = field(default_factory=list)


def _rect_window(free, fixed, cfg):
    limit = cfg.bracket_scan_limit
    if free == "a":
        return -limit, 0.0
    if free == "b":
        return 0.0, limit
    if free == "E":
        return 0.0, fixed["V0"]
    return fixed["E"], fixed["E"] + limit


def rect_free_function(free: str, fixed: Dict[str, float], constants: PhysicalConstants = CODATA_2018):
    """Vectorised determinant as a function of the one free rectangular parameter."""
    kf = constants.kinetic_factor
    vals = dict(fixed)

    def det(x):
        vals[free] = x
        E, V0 = vals["E"], vals["V0"]
        k = np.sqrt(kf * np.asarray(E, dtype=float))
        beta = np.sqrt(kf * np.clip(np.asarray(V0, dtype=float) - E, 0.0, None))
        return rect_det_kernel(k, beta, vals["a"], vals["b"])

    return det


def _check_rect_fixed(fixed, free):
    if free not in RECT_PARAMETERS:
        raise DomainError(f"free parameter must be one of {RECT_PARAMETERS}, got {free!r}")
    expected = set(RECT_PARAMETERS) - {free}
    if set(fixed) != expected:
        raise DomainError(f"fix exactly {sorted(expected)} when solving for {free}, got {sorted(fixed)}")
    if "a" in fixed and fixed["a"] > 0:
        raise DomainError(f"pre-barrier coordinate a must be <= 0, got {fixed['a']}")
    if "b" in fixed and fixed["b"] < 0:
        raise DomainError(f"barrier length b must be >= 0, got {fixed['b']}")
    if "E" in fixed and fixed["E"] <= 0:
        raise DomainError("E must be positive")
    if "V0" in fixed and fixed["V0"] <= 0:
        raise DomainError("V0 must be positive")
    if "E" in fixed and "V0" in fixed and fixed["E"] >= fixed["V0"]:
        raise DomainError(f"need E < V0, got E={fixed['E']}, V0={fixed['V0']}")


def solve_rect_fourth(
    fixed: Dict[str, float],
    free: str,
    cfg: RootConfig = DEFAULT_CONFIG,
    window: Optional[Tuple[float, float]] = None,
    constants: PhysicalConstants = CODATA_2018,
) -> List[float]:
    """All roots in the free parameter, ascending, with the other three held fixed.

    Default windows: a in (-limit, 0), b in (0, limit), E in (0, V0), V0 in (E, E + limit).
    """
    fixed = {k: float(v) for k, v in fixed.items()}
    _check_rect_fixed(fixed, free)
    lo, hi = window if window is not None else _rect_window(free, fixed, cfg)
    scan = scan_roots(rect_free_function(free, fixed, constants), lo, hi, cfg)
    if not scan.roots:
        raise NoRootInWindowError(
            f"no root for {free} in ({lo}, {hi}); sampled det range {scan.extrema}",
            extrema=scan.extrema,
            point=fixed,
        )
    return scan.roots


def _continue(roots, previous):
    if previous is None:
        return min(roots, key=abs)
    return min(roots, key=lambda r: (abs(r - previous), r))


def trace_rect_locus(
    b_values: Iterable[float],
    V0: float,
    E_values: Sequence[float],
    cfg: RootConfig = DEFAULT_CONFIG,
    a_window: Optional[Tuple[float, float]] = None,
    max_jump: float = 0.1,
    constants: PhysicalConstants = CODATA_2018,
) -> List[SolutionLocus]:
    """One locus a(E) per barrier length b at fixed V0.

    The first point takes the root closest to a = 0; later points follow the
    root nearest the previous one, flagging steps larger than ``max_jump``.
    """
    loci = []
    for b in b_values:
        locus = SolutionLocus("rect", "E", "a", {"b": float(b), "V0": float(V0)})
        prev = None
        for E in E_values:
            E = float(E)
            if not 0 < E < V0:
                locus.skipped.append((E, "E outside (0, V0)"))
                continue
            try:
                roots = solve_rect_fourth({"b": b, "E": E, "V0": V0}, "a", cfg, a_window, constants)
            except SolverError as exc:
                locus.skipped.append((E, str(exc)))
                continue
            a = _continue(roots, prev)
            jump = prev is not None and abs(a - prev) > max_jump
            residual = float(rect_free_function("a", {"b": b, "E": E, "V0": V0}, constants)(a))
            locus.points.append(LocusPoint(E, a, residual, jump))
            prev = a
        loci.append(locus)
    return loci


DEFAULT_THETA_WINDOW = (-4.0 * math.pi, 0.0)


def solve_tri_theta(
    E: float,
    V0: float,
    c: float,
    window: Tuple[float, float] = DEFAULT_THETA_WINDOW,
    cfg: RootConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA_2018,
) -> List[float]:
    """Roots in Theta of the triangular determinant, ordered from the one nearest zero outward."""
    lo, hi = window
    if hi > 0:
        raise DomainError("Theta window must lie in Theta <= 0 (a < 0)")
    d = derive_tri(TriParams(E=E, V0=V0, c=c), constants)
    scan = scan_roots(tri_theta_function(d), lo, hi, cfg)
    if not scan.roots:
        raise NoRootInWindowError(
            f"no Theta root in ({lo}, {hi}); sampled det range {scan.extrema}",
            extrema=scan.extrema,
            point={"E": E, "V0": V0, "c": c},
        )
    return sorted(scan.roots, reverse=True)


@dataclass(frozen=True)
class ThetaRoot:
    E: float
    V0: float
    c: float
    branch: int
    theta: float
    a: float
    residual: float
    family: int  # sign of dDet/dTheta at the root: +1 rising, -1 falling


def tri_theta_sweep(
    E_values: Sequence[float],
    V0: float,
    c: float,
    window: Tuple[float, float] = DEFAULT_THETA_WINDOW,
    cfg: RootConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA_2018,
):
    """Theta roots for each energy; branch 0 is the root nearest Theta = 0.

    Branch numbers follow root order and can shift when a root enters the
    window; ``family`` (the slope sign) is continuous in E.

    Returns (roots, skipped).
    """
    rows, skipped = [], []
    for E in E_values:
        E = float(E)
        try:
            thetas = solve_tri_theta(E, V0, c, window, cfg, constants)
        except (SolverError, DomainError) as exc:
            skipped.append((E, str(exc)))
            continue
        d = derive_tri(TriParams(E=E, V0=V0, c=c), constants)
        det, slope = tri_theta_function(d), tri_theta_slope(d)
        for branch, theta in enumerate(thetas):
            family = 1 if slope(theta) >= 0 else -1
            rows.append(ThetaRoot(E, V0, c, branch, theta, theta / d.k, float(det(theta)), family))
    return rows, skipped


def trace_tri_locus(
    V0: float,
    c_values: Sequence[float],
    E_values: Sequence[float],
    window: Tuple[float, float] = DEFAULT_THETA_WINDOW,
    cfg: RootConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA_2018,
):
    """(E, a) sets at each barrier base c, one locus per (c, family, rank).

    ``family`` is the slope sign of the root and ``rank`` counts the roots of
    that family outward from Theta = 0. Each locus runs through ``E_values``
    in the given order. Returns (loci, skipped) with loci sorted by key and
    skipped holding (E, c, reason).
    """
    loci: Dict[Tuple[float, int, int], SolutionLocus] = {}
    skipped = []
    for c in c_values:
        c = float(c)
        rows, skip = tri_theta_sweep(E_values, V0, c, window, cfg, constants)
        skipped.extend((E, c, msg) for E, msg in skip)
        rank: Dict[Tuple[float, int], int] = {}
        for row in rows:  # rows arrive nearest-zero first within each E
            r = rank[(row.E, row.family)] = rank.get((row.E, row.family), -1) + 1
            key = (c, row.family, r)
            if key not in loci:
                loci[key] = SolutionLocus("tri", "E", "a", {"c": c, "V0": float(V0), "family": row.family, "rank": r})
            loci[key].points.append(LocusPoint(row.E, row.a, row.residual))
    return [loci[k] for k in sorted(loci)], skipped


@dataclass(frozen=True)
class ShortedTriRoot:
    ratio: float  # E / V0
    gamma_c: float
    K: float
    X: float
    residual: float
    c: float
    gamma: float
    V0: float
    E: float
    b: float


def trace_shorted_tri(
    ratios: Sequence[float],
    gamma_c_window: Tuple[float, float] = (0.5, 12.0),
    cfg: RootConfig = DEFAULT_CONFIG,
    c: float = 1.0,
    constants: PhysicalConstants = CODATA_2018,
) -> Tuple[List[ShortedTriRoot], List[Tuple[float, str]]]:
    """Zeros of the shorted-barrier determinant along rays K = -(1 - r) s, X = r s.

    Each ray has fixed r = E/V0 and is scanned in s = gamma c = X - K. Roots are
    mapped to physical units for a barrier of base ``c``: gamma = s / c,
    V0 from the inverse Airy scale, E = r V0, and the tunneling length b.
    R = gamma / k reduces to 1 / sqrt(X) on the whole (K, X) plane.
    """
    out, skipped = [], []
    lo, hi = gamma_c_window
    if lo <= 0:
        raise DomainError("gamma*c window must be positive")
    for r in ratios:
        r = float(r)
        if not 0 < r < 1:
            skipped.append((r, "E/V0 outside (0, 1)"))
            continue

        def det(s, r=r):
            X = r * s
            return shorted_tri_determinant(1.0 / math.sqrt(X), -(1.0 - r) * s, X)

        scan = scan_roots(det, lo, hi, cfg, vectorized=False)
        if not scan.roots:
            skipped.append((r, f"no root in gamma*c window ({lo}, {hi})"))
        for s, res in zip(scan.roots, scan.residuals):
            gamma = s / c
            V0 = potential_from_gamma(gamma, c, constants)
            E = r * V0
            out.append(ShortedTriRoot(r, s, -(1.0 - r) * s, r * s, res, c, gamma, V0, E, tunneling_length(E, V0, c)))
    return out, skipped
