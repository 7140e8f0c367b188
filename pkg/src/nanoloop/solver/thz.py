"""Quasi-static THz drive: the barrier height follows V0 + V1 sin(wt) and b is re-solved at each step."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from ..errors import DomainError, SolverError
from ..models.rect import rect_det_kernel
from ..physics import CODATA_2018, PhysicalConstants
from .roots import DEFAULT_CONFIG, RootConfig, scan_roots


class QuasiStaticSample(NamedTuple):
    omega_t: float
    V: float
    b: float
    residual: float


@dataclass
class QuasiStaticTrace:
    fixed: Dict[str, float]
    samples: List[QuasiStaticSample] = field(default_factory=list)
    complete: bool = True
    diagnostic: Optional[str] = None

    def b_values(self) -> np.ndarray:
        return np.array([s.b for s in self.samples])

    def extrema(self):
        """(min, mid, max) of b, where mid is the undriven value at wt = 0."""
        b = self.b_values()
        return float(b.min()), float(b[0]), float(b.max())


def drive_sine(j: int, n: int) -> float:
    """sin(2 pi j / n), reduced exactly so that mirror-image phases give bit-identical values."""
    u = Fraction(2 * j, n) % 2  # angle / pi in [0, 2)
    sign = 1.0
    if u >= 1:
        u -= 1
        sign = -1.0
    if u > Fraction(1, 2):
        u = 1 - u
    return sign * math.sin(math.pi * float(u))


def quasistatic_sweep(
    a: float,
    E: float,
    V0: float,
    V1: float,
    n_steps: int,
    cfg: RootConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA_2018,
    coordinate_sign: int = -1,
    b_window: Optional[Sequence[float]] = None,
) -> QuasiStaticTrace:
    """Solve the rectangular barrier length b at n_steps phases wt = 2 pi j / n_steps.

    ``a`` is the pre-barrier length (> 0); it enters the determinant as the
    coordinate ``coordinate_sign * a``. The first phase takes the root nearest
    b = a and later phases the root nearest the previous b. A phase without a
    root stops the sweep and the partial trace is returned with a diagnostic.
    """
    if a <= 0:
        raise DomainError(f"pre-barrier length must be positive, got {a}")
    if coordinate_sign not in (-1, 1):
        raise DomainError("coordinate_sign must be -1 or +1")
    if not 0 <= V1 < V0:
        raise DomainError(f"need 0 <= V1 < V0, got V0={V0}, V1={V1}")
    if n_steps < 4:
        raise DomainError("n_steps must be >= 4")
    if not 0 < E:
        raise DomainError("E must be positive")
    lo, hi = b_window if b_window is not None else (0.0, cfg.bracket_scan_limit)
    kf = constants.kinetic_factor
    coord = coordinate_sign * a
    trace = QuasiStaticTrace(fixed={"a": a, "E": E, "V0": V0, "V1": V1, "coordinate_sign": coordinate_sign})
    k = math.sqrt(kf * E)
    prev = a
    for j in range(n_steps):
        omega_t = 2.0 * math.pi * j / n_steps
        V = V0 + V1 * drive_sine(j, n_steps)
        if E >= V:
            trace.complete = False
            trace.diagnostic = f"E={E} >= V={V} at wt={omega_t}: no tunneling barrier"
            break
        beta = math.sqrt(kf * (V - E))

        def det(b, beta=beta):
            return rect_det_kernel(k, beta, coord, b)

        try:
            scan = scan_roots(det, lo, hi, cfg)
        except SolverError as exc:
            trace.complete = False
            trace.diagnostic = f"wt={omega_t}: {exc}"
            break
        if not scan.roots:
            trace.complete = False
            trace.diagnostic = f"wt={omega_t}: no root for b in ({lo}, {hi}); det range {scan.extrema}"
            break
        b = min(scan.roots, key=lambda r: (abs(r - prev), r))
        trace.samples.append(QuasiStaticSample(omega_t, V, b, float(det(b))))
        prev = b
    return trace
