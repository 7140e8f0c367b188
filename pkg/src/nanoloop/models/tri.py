"""Closed loop with a triangular barrier of base c, and its shorted (a = 0) special case.

Region II is written in Airy functions of xi = K + gamma x, so the barrier ends
sit at xi = K (x = 0) and xi = X = K + gamma c (x = c). With R = gamma / k and
Theta = k a the boundary matrix is

    [ 1          0           -Ai(K)      -Bi(K)    ]
    [ 0          1           -R Ai'(K)   -R Bi'(K) ]
    [ cos Theta  sin Theta   -Ai(X)      -Bi(X)    ]
    [ sin Theta  -cos Theta  +R Ai'(X)   +R Bi'(X) ]

Note that Ai(K + gamma x) solves psi'' = gamma^2 (K + gamma x) psi, i.e. the
Airy equation in x; see ``tri_wavefunction``.
"""

from __future__ import annotations

import math
from typing import Callable, Optional

import numpy as np

from ..airy import AiryQuad, airy_eval
from ..errors import DomainError, NotASolutionError
from ..physics import DerivedParameters
from .common import WaveCoefficients, WavefunctionSample, check_region, check_span, solve_normalized


def _require(d: DerivedParameters, theta: Optional[float]):
    if d.R is None or d.K is None or d.X is None:
        raise DomainError("triangular model needs R, K and X; use derive_tri")
    theta = d.Theta if theta is None else theta
    if theta is None:
        raise DomainError("Theta is unknown: pass theta= or build DerivedParameters with a")
    return theta


def _brackets(R, p: AiryQuad, q: AiryQuad):
    """Coefficients (S, C, Q) with Det(Theta) = S sin Theta + C cos Theta + Q; p at K, q at X."""
    w_x = q.ai_prime * q.bi - q.ai * q.bi_prime
    w_k = p.ai_prime * p.bi - p.ai * p.bi_prime
    sin_coeff = R**2 * (p.ai_prime * q.bi_prime - q.ai_prime * p.bi_prime) + (p.ai * q.bi - q.ai * p.bi)
    cos_coeff = R * (q.ai * p.bi_prime - q.ai_prime * p.bi) + R * (p.ai * q.bi_prime - p.ai_prime * q.bi)
    return sin_coeff, cos_coeff, R * w_x + R * w_k


def tri_theta_function(d: DerivedParameters) -> Callable:
    """Det as a function of Theta alone (numpy-broadcasting) with Airy values fixed at K and X."""
    _require(d, 0.0)
    S, C, Q = _brackets(d.R, airy_eval(d.K), airy_eval(d.X))

    def det(theta):
        return S * np.sin(theta) + C * np.cos(theta) + Q

    return det


def tri_theta_slope(d: DerivedParameters) -> Callable:
    """dDet/dTheta. Roots with positive slope form one continuous family in E, negative slope the other."""
    _require(d, 0.0)
    S, C, _ = _brackets(d.R, airy_eval(d.K), airy_eval(d.X))

    def slope(theta):
        return S * np.cos(theta) - C * np.sin(theta)

    return slope


def tri_matrix(d: DerivedParameters, theta: Optional[float] = None) -> np.ndarray:
    theta = _require(d, theta)
    R = d.R
    p, q = airy_eval(d.K), airy_eval(d.X)
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [1.0, 0.0, -p.ai, -p.bi],
            [0.0, 1.0, -R * p.ai_prime, -R * p.bi_prime],
            [c, s, -q.ai, -q.bi],
            [s, -c, R * q.ai_prime, R * q.bi_prime],
        ]
    )


def tri_determinant(d: DerivedParameters, theta: Optional[float] = None) -> float:
    """Factored six-bracket closed form of the boundary determinant."""
    theta = _require(d, theta)
    R = d.R
    p, q = airy_eval(d.K), airy_eval(d.X)
    s, c = math.sin(theta), math.cos(theta)
    return (
        R**2 * (p.ai_prime * q.bi_prime - q.ai_prime * p.bi_prime) * s
        + R * (q.ai_prime * q.bi - q.ai * q.bi_prime)
        + R * (p.ai_prime * p.bi - p.ai * p.bi_prime)
        + R * (q.ai * p.bi_prime - q.ai_prime * p.bi) * c
        + R * (p.ai * q.bi_prime - p.ai_prime * q.bi) * c
        + (p.ai * q.bi - q.ai * p.bi) * s
    )


def shorted_tri_determinant(R: float, K: float, X: float) -> float:
    """Eight-term determinant of the shorted barrier (Theta = 0), linear in R."""
    if not all(math.isfinite(v) for v in (R, K, X)):
        raise DomainError("R, K and X must be finite")
    p, q = airy_eval(K), airy_eval(X)
    bracket = (
        q.ai_prime * q.bi - q.ai * q.bi_prime
        + p.ai_prime * p.bi - p.ai * p.bi_prime
        + q.ai * p.bi_prime - q.ai_prime * p.bi
        + p.ai * q.bi_prime - p.ai_prime * q.bi
    )
    return bracket * R


def tri_coefficients(d: DerivedParameters, theta: Optional[float] = None, tol: float = 1e-9) -> WaveCoefficients:
    """A = 1 and (B, C, D) from the best-conditioned three rows of the boundary matrix."""
    theta = _require(d, theta)
    if d.X == d.K:
        raise DomainError("c = 0 is a trivial configuration; no coefficients")
    det = tri_determinant(d, theta)
    if abs(det) > tol:
        raise NotASolutionError(f"|det| = {abs(det):.3e} exceeds tolerance {tol:.1e}")
    coeffs, _, _ = solve_normalized(tri_matrix(d, theta))
    return coeffs


def tri_wavefunction(coeffs: WaveCoefficients, d: DerivedParameters, x: float, region: str) -> WavefunctionSample:
    """Region I spans [Theta/k, 0]; region II spans [0, c] with c = (X - K)/gamma."""
    check_region(region)
    if d.gamma is None or d.K is None or d.X is None:
        raise DomainError("triangular model needs gamma, K and X; use derive_tri")
    k = d.k
    if region == "I":
        if d.Theta is None:
            raise DomainError("region I span needs Theta")
        check_span(x, d.Theta / k, 0.0, "I")
        c, s = math.cos(k * x), math.sin(k * x)
        return WavefunctionSample(x, coeffs.A * c + coeffs.B * s, -k * coeffs.A * s + k * coeffs.B * c)
    gamma = d.gamma
    check_span(x, 0.0, (d.X - d.K) / gamma, "II")
    quad = airy_eval(d.K + gamma * x)
    psi = coeffs.C * quad.ai + coeffs.D * quad.bi
    dpsi = gamma * (coeffs.C * quad.ai_prime + coeffs.D * quad.bi_prime)
    return WavefunctionSample(x, psi, dpsi)
