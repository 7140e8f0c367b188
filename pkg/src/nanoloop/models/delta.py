"""Closed loop of half-length a with a delta barrier at the origin.

With A = C = 1 the two halves are cos(kx) + B sin(kx) (x < 0) and
cos(kx) + D sin(kx) (x > 0). Joining x = -a to x = a requires

    (B + D) sin(ka) = 0              (value)
    2 sin(ka) + (B - D) cos(ka) = 0  (derivative)

The delta strength never enters: no derivative jump is imposed at x = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..errors import DomainError, PoleError
from .common import WaveCoefficients, WavefunctionSample


@dataclass(frozen=True)
class DeltaSolution:
    """Either a unique (B, D) or, when sin(ka) = 0, the family D = B with B free."""

    ka: float
    family: bool
    B: Optional[float] = None
    D: Optional[float] = None

    def coefficients(self, B: Optional[float] = None) -> WaveCoefficients:
        if self.family:
            if B is None:
                raise ValueError("ka = n*pi: B is a free parameter, pass B=")
            return WaveCoefficients(1.0, B, 1.0, B)
        if B is not None and B != self.B:
            raise ValueError(f"B is fixed at {self.B} for ka={self.ka}")
        return WaveCoefficients(1.0, self.B, 1.0, self.D)


def delta_solution(ka: float, atol: float = 1e-12) -> DeltaSolution:
    if not math.isfinite(ka):
        raise DomainError(f"ka must be finite, got {ka!r}")
    if ka == 0:
        raise DomainError("ka = 0 (zero energy) is the excluded trivial case")
    s, c = math.sin(ka), math.cos(ka)
    if abs(s) <= atol:
        return DeltaSolution(ka=ka, family=True)
    if abs(c) <= atol:
        raise PoleError(f"cos(ka) = 0 at ka={ka}: tan(ka) undefined")
    t = math.tan(ka)
    return DeltaSolution(ka=ka, family=False, B=-t, D=t)


def value_closure_residual(coeffs: WaveCoefficients, ka: float) -> float:
    return (coeffs.B + coeffs.D) * math.sin(ka)


def derivative_closure_residual(coeffs: WaveCoefficients, ka: float) -> float:
    return 2.0 * math.sin(ka) + (coeffs.B - coeffs.D) * math.cos(ka)


def quadratic_constraint_residual(coeffs: WaveCoefficients) -> float:
    """A^2 + B^2 - C^2 - D^2, which vanishes for every admissible coefficient set."""
    return (coeffs.A - coeffs.C) * (coeffs.A + coeffs.C) + (coeffs.B - coeffs.D) * (coeffs.B + coeffs.D)


def delta_wavefunction(coeffs: WaveCoefficients, k: float, x: float, a: float, side: Optional[str] = None) -> WavefunctionSample:
    """Sample on [-a, a]; ``side`` ('I' or 'II') picks the half at x = 0, default by sign of x."""
    if a <= 0:
        raise DomainError(f"half-length a must be positive, got {a}")
    if not -a <= x <= a:
        raise DomainError(f"x={x} outside [-{a}, {a}]")
    if side is None:
        side = "I" if x < 0 else "II"
    if side not in ("I", "II"):
        raise DomainError(f"side must be 'I' or 'II', got {side!r}")
    amp, slope = (coeffs.A, coeffs.B) if side == "I" else (coeffs.C, coeffs.D)
    c, s = math.cos(k * x), math.sin(k * x)
    return WavefunctionSample(x, amp * c + slope * s, -k * amp * s + k * slope * c)
