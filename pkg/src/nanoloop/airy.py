"""Real Airy functions Ai, Bi and their first derivatives.

Inside [-16, 16] each value is a Taylor re-expansion about the nearest node of a
0.25-spaced table (``_airy_nodes``), with Taylor coefficients generated by the
Airy equation y'' = x y itself:

    (m + 2)(m + 1) y[m+2] = x0 y[m] + y[m-1]

Node values are held as double-double pairs and the series is summed with
``math.fsum``, so the absolute error stays near one ulp of the local envelope.
Near the oscillatory zeros that is what keeps the *relative* error below 1e-12.
Outside the table the standard large-argument expansions in zeta = 2/3 |x|^1.5
take over; there the truncation error is below exp(-2 zeta) ~ 1e-37.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from . import _airy_nodes
from .errors import NaNError, RangeError

X_MIN = -100.0
X_MAX = 100.0  # Bi overflows a double just beyond x = 104

_TABLE_LO = float(_airy_nodes.LO)
_TABLE_STEP = float(_airy_nodes.STEP)
_TABLE_HI = _TABLE_LO + _TABLE_STEP * (len(_airy_nodes.NODES) - 1)
_SQRT_PI = math.sqrt(math.pi)
_QUARTER_PI = 0.25 * math.pi


class AiryQuad(NamedTuple):
    ai: float
    bi: float
    ai_prime: float
    bi_prime: float


def _split(text):
    exact = Fraction(text)
    hi = float(exact)
    return hi, float(exact - Fraction(hi))


_NODES = tuple(tuple(_split(v) for v in row) for row in _airy_nodes.NODES)


def _taylor(x0, f, fp, h):
    """Value and derivative at x0 + h of the Airy solution with data (f, fp) at x0."""
    (f0, f0_lo), (f1, f1_lo) = f, fp
    vterms = [f0, f0_lo, f1 * h, f1_lo * h]
    dterms = [f1, f1_lo]
    scale_v = abs(f0) + abs(f1 * h)
    scale_d = abs(f1) + abs(x0 * f0 * h)
    y_prev2, y_prev1 = f0, f1  # y[m-2], y[m-1]
    y_prev3 = 0.0
    hpow_prev = h  # h**(m-1)
    small = 0
    for m in range(2, 64):
        y = (x0 * y_prev2 + y_prev3) / (m * (m - 1))
        hpow = hpow_prev * h
        t = y * hpow
        td = m * y * hpow_prev
        vterms.append(t)
        dterms.append(td)
        if abs(t) <= 1e-19 * scale_v and abs(td) <= 1e-19 * scale_d:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        y_prev3, y_prev2, y_prev1 = y_prev2, y_prev1, y
        hpow_prev = hpow
    return math.fsum(vterms), math.fsum(dterms)


def _asymptotic_coefficients(n=40):
    u = [1.0]
    for k in range(1, n):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1)))
    v = [-(6 * k + 1) / (6 * k - 1) * uk for k, uk in enumerate(u)]
    return u, v


_U, _V = _asymptotic_coefficients()


def _series(coeffs, inv_zeta, alternate, start=0, stride=1):
    """Sum of (+-1)^j coeffs[start + j*stride] inv_zeta**(start + j*stride), truncated at the smallest term."""
    total = 0.0
    sign = 1.0
    last = math.inf
    for idx in range(start, len(coeffs), stride):
        term = coeffs[idx] * inv_zeta**idx
        if abs(term) > last:
            break
        total += sign * term
        if abs(term) < 1e-18 * abs(total):
            break
        last = abs(term)
        if alternate:
            sign = -sign
    return total


def _asymptotic(x):
    t = abs(x)
    zeta = (2.0 / 3.0) * t * math.sqrt(t)
    inv = 1.0 / zeta
    root4 = t**0.25
    if x > 0:
        decay = math.exp(-zeta)
        grow = math.exp(zeta)
        ai = decay / (2.0 * _SQRT_PI * root4) * _series(_U, inv, True)
        aip = -root4 * decay / (2.0 * _SQRT_PI) * _series(_V, inv, True)
        bi = grow / (_SQRT_PI * root4) * _series(_U, inv, False)
        bip = root4 * grow / (_SQRT_PI) * _series(_V, inv, False)
        return AiryQuad(ai, bi, aip, bip)
    phase = zeta - _QUARTER_PI
    s, c = math.sin(phase), math.cos(phase)
    pu = _series(_U, inv, True, 0, 2)
    qu = _series(_U, inv, True, 1, 2)
    pv = _series(_V, inv, True, 0, 2)
    qv = _series(_V, inv, True, 1, 2)
    amp = 1.0 / (_SQRT_PI * root4)
    ampd = root4 / _SQRT_PI
    ai = amp * (c * pu + s * qu)
    bi = amp * (-s * pu + c * qu)
    aip = ampd * (s * pv - c * qv)
    bip = ampd * (c * pv + s * qv)
    return AiryQuad(ai, bi, aip, bip)


def airy_eval(x: float) -> AiryQuad:
    """Ai, Bi, Ai', Bi' at a real ``x`` in [X_MIN, X_MAX]."""
    x = float(x)
    if not math.isfinite(x):
        raise NaNError(f"Airy argument must be finite, got {x!r}")
    if x < X_MIN or x > X_MAX:
        raise RangeError(f"Airy argument {x!r} outside supported range [{X_MIN}, {X_MAX}]")
    if x < _TABLE_LO or x > _TABLE_HI:
        return _asymptotic(x)
    i = int(round((x - _TABLE_LO) / _TABLE_STEP))
    x0 = _TABLE_LO + i * _TABLE_STEP
    h = x - x0
    ai, aip, bi, bip = _NODES[i]
    a, ap = _taylor(x0, ai, aip, h)
    b, bp = _taylor(x0, bi, bip, h)
    return AiryQuad(a, b, ap, bp)
