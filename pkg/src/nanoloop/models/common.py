from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..errors import DegenerateSystemError, DomainError

REGIONS = ("I", "II")

# Coefficient solves refuse 3x3 subsystems worse conditioned than this.
MAX_CONDITION = 1e12


@dataclass(frozen=True)
class WaveCoefficients:
    A: float
    B: float
    C: float
    D: float
    normalized: bool = True

    def as_array(self) -> np.ndarray:
        return np.array([self.A, self.B, self.C, self.D])


class WavefunctionSample(NamedTuple):
    x: float
    psi: float
    psi_prime: float


def check_region(region):
    if region not in REGIONS:
        raise DomainError(f"region must be 'I' or 'II', got {region!r}")


def check_span(x, lo, hi, label):
    slack = 1e-12 * max(1.0, abs(lo), abs(hi))
    if not (lo - slack <= x <= hi + slack):
        raise DomainError(f"x={x} outside region {label} span [{lo}, {hi}]")


def solve_normalized(matrix: np.ndarray):
    """Null vector of a rank-3 4x4 system with its first component fixed to 1.

    Every row triple is tried; the best-conditioned one wins and the held-out
    row is reported. Returns (coefficients, rows_used, row_residuals).
    """
    best = None
    for skip in (3, 2, 1, 0):
        rows = [r for r in range(4) if r != skip]
        sub = matrix[np.ix_(rows, [1, 2, 3])]
        cond = np.linalg.cond(sub)
        if not np.isfinite(cond) or cond > MAX_CONDITION:
            continue
        if best is None or cond < best[0]:
            best = (cond, rows, sub)
    if best is None:
        raise DegenerateSystemError("every 3x3 row subsystem is singular")
    _, rows, sub = best
    rhs = -matrix[rows, 0]
    B, C, D = np.linalg.solve(sub, rhs)
    vec = np.array([1.0, B, C, D])
    residuals = matrix @ vec
    return WaveCoefficients(1.0, float(B), float(C), float(D)), tuple(rows), residuals
