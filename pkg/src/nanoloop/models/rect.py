"""Closed loop with a rectangular barrier: pre-barrier a <= x <= 0, barrier 0 <= x <= b.

psi_I = A cos(kx) + B sin(kx),  psi_II = C exp(beta x) + D exp(-beta x).
The four continuity conditions (x = 0, and x = a joined to x = b) form a
homogeneous 4x4 system whose determinant has the closed form

    2 (beta^2 - k^2) sinh(beta b) sin(k a) + 4 k beta [1 - cosh(beta b) cos(k a)].
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError, NotASolutionError, SingularityError
from ..physics import DerivedParameters
from .common import WaveCoefficients, WavefunctionSample, check_region, check_span, solve_normalized


def _check(d: DerivedParameters, a, b):
    if d.beta is None:
        raise DomainError("rectangular model needs beta; use derive_rect")
    if d.k <= 0 or d.beta < 0:
        raise DomainError(f"need k > 0 and beta >= 0, got k={d.k}, beta={d.beta}")
    if a > 0:
        raise DomainError(f"pre-barrier coordinate a must be <= 0, got {a}")
    if b < 0:
        raise DomainError(f"barrier length b must be >= 0, got {b}")


def rect_det_kernel(k, beta, a, b):
    """Unchecked closed-form determinant; broadcasts over numpy arrays."""
    return 2.0 * (beta**2 - k**2) * np.sinh(beta * b) * np.sin(k * a) + 4.0 * k * beta * (
        1.0 - np.cosh(beta * b) * np.cos(k * a)
    )


def rect_matrix(d: DerivedParameters, a: float, b: float) -> np.ndarray:
    _check(d, a, b)
    k, beta = d.k, d.beta
    ka = k * a
    ep, em = math.exp(beta * b), math.exp(-beta * b)
    return np.array(
        [
            [1.0, 0.0, -1.0, -1.0],
            [0.0, k, -beta, beta],
            [math.cos(ka), math.sin(ka), -ep, -em],
            [k * math.sin(ka), -k * math.cos(ka), beta * ep, -beta * em],
        ]
    )


def rect_determinant(d: DerivedParameters, a: float, b: float) -> float:
    _check(d, a, b)
    return float(rect_det_kernel(d.k, d.beta, a, b))


def shorted_rect_check(d: DerivedParameters, b: float) -> float:
    """Determinant with the pre-barrier removed (a = 0): 2 k beta [1 - cosh(beta b)]."""
    _check(d, 0.0, b)
    return 2.0 * d.k * d.beta * (1.0 - math.cosh(d.beta * b))


def rect_coefficients(d: DerivedParameters, a: float, b: float, tol: float = 1e-9) -> WaveCoefficients:
    """(A, B, C, D) with A = 1 at a zero of the determinant.

    B, C, D come from the best-conditioned three rows of the boundary matrix;
    C + D = 1 always holds because the first row is A - C - D = 0.
    """
    _check(d, a, b)
    if d.beta == 0 or b == 0:
        raise DomainError("b = 0 or E = V0 is a trivial configuration; no coefficients")
    det = rect_determinant(d, a, b)
    if abs(det) > tol:
        raise NotASolutionError(f"|det| = {abs(det):.3e} exceeds tolerance {tol:.1e}")
    coeffs, _, _ = solve_normalized(rect_matrix(d, a, b))
    return coeffs


def rect_coefficients_closed_form(d: DerivedParameters, a: float, b: float) -> WaveCoefficients:
    """The textbook shortcut: C, D from the x = 0 conditions alone, B from the derivative closure.

    C = (1 + k/beta)/2 and D = (1 - k/beta)/2 only follow from the x = 0
    conditions if B = 1, which a zero of the determinant does not imply; the B
    printed beside them is generally different again. Kept as a cross-check
    only: ``rect_coefficients`` is the consistent solution.
    """
    _check(d, a, b)
    k, beta = d.k, d.beta
    if beta == 0:
        raise DomainError("beta = 0: k/beta undefined")
    cos_ka = math.cos(k * a)
    if abs(cos_ka) < 1e-12:
        raise SingularityError("cos(ka) = 0: closed-form B is indeterminate")
    C = 0.5 * (1.0 + k / beta)
    D = 0.5 * (1.0 - k / beta)
    pref = beta / (2.0 * k * cos_ka)
    B = pref * (1.0 + k / beta) * math.exp(beta * b) - pref * (1.0 - k / beta) * math.exp(-beta * b) + math.tan(k * a)
    return WaveCoefficients(1.0, B, C, D)


def rect_wavefunction(coeffs: WaveCoefficients, d: DerivedParameters, x: float, region: str, a: float, b: float) -> WavefunctionSample:
    _check(d, a, b)
    check_region(region)
    k, beta = d.k, d.beta
    if region == "I":
        check_span(x, a, 0.0, "I")
        c, s = math.cos(k * x), math.sin(k * x)
        return WavefunctionSample(x, coeffs.A * c + coeffs.B * s, -k * coeffs.A * s + k * coeffs.B * c)
    check_span(x, 0.0, b, "II")
    ep, em = math.exp(beta * x), math.exp(-beta * x)
    return WavefunctionSample(x, coeffs.C * ep + coeffs.D * em, beta * (coeffs.C * ep - coeffs.D * em))
