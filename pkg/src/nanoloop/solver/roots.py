"""Uniform-scan bracketing and bisection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..errors import DomainError, MaxIterError, NoBracketError

_EPS = np.finfo(float).eps
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RootConfig:
    """Root-finding settings.

    A root is accepted only if |f(root)| <= abs_tolerance. Bisection runs to
    the machine-relative floor of the bracket unless ``x_tolerance`` lets it
    stop earlier once the tolerance is met.
    """

    abs_tolerance: float = 1e-9
    max_iterations: int = 200
    bracket_scan_step: float = 1e-3
    bracket_scan_limit: float = 5.0
    x_tolerance: float = 0.0
    touch_roots: bool = True

    def __post_init__(self):
        if not self.abs_tolerance > 0:
            raise DomainError("abs_tolerance must be > 0")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1")
        if not self.bracket_scan_step > 0:
            raise DomainError("bracket_scan_step must be > 0")
        if not self.bracket_scan_limit > 0:
            raise DomainError("bracket_scan_limit must be > 0")
        if self.x_tolerance < 0:
            raise DomainError("x_tolerance must be >= 0")

    def to_dict(self) -> dict:
        return {
            "abs_tolerance": self.abs_tolerance,
            "max_iterations": self.max_iterations,
            "bracket_scan_step": self.bracket_scan_step,
            "bracket_scan_limit": self.bracket_scan_limit,
            "x_tolerance": self.x_tolerance,
            "touch_roots": self.touch_roots,
        }


DEFAULT_CONFIG = RootConfig()


def bisect_root(f: Callable[[float], float], lo: float, hi: float, cfg: RootConfig = DEFAULT_CONFIG) -> float:
    """Bisect a sign change of ``f`` on [lo, hi]; deterministic for a given f."""
    lo, hi = float(lo), float(hi)
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise NoBracketError(f"non-finite end values f({lo})={flo}, f({hi})={fhi}")
    if (flo > 0) == (fhi > 0):
        raise NoBracketError(f"no sign change: f({lo})={flo:.6g}, f({hi})={fhi:.6g}")
    for _ in range(cfg.max_iterations):
        width = hi - lo
        floor = 4.0 * _EPS * max(abs(lo), abs(hi))
        best, fbest = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
        if width <= floor or (width <= cfg.x_tolerance and abs(fbest) <= cfg.abs_tolerance):
            return best
        mid = lo + 0.5 * width
        if not lo < mid < hi:
            return best
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    raise MaxIterError(f"bisection did not converge in {cfg.max_iterations} iterations on [{lo}, {hi}]")


def _golden_min(g, lo, hi, iterations=80):
    """Minimise a unimodal g on [lo, hi]; returns (x, g(x))."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    g1, g2 = g(x1), g(x2)
    for _ in range(iterations):
        if hi - lo <= 4.0 * _EPS * max(abs(lo), abs(hi), 1e-300):
            break
        if g1 <= g2:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - _GOLDEN * (hi - lo)
            g1 = g(x1)
        else:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + _GOLDEN * (hi - lo)
            g2 = g(x2)
    return (x1, g1) if g1 <= g2 else (x2, g2)


@dataclass
class ScanResult:
    roots: List[float] = field(default_factory=list)
    residuals: List[float] = field(default_factory=list)
    rejected: List[Tuple[float, float]] = field(default_factory=list)
    extrema: Tuple[float, float] = (math.nan, math.nan)


def scan_roots(
    f: Callable,
    lo: float,
    hi: float,
    cfg: RootConfig = DEFAULT_CONFIG,
    *,
    vectorized: bool = True,
    open_ends: bool = True,
    step: Optional[float] = None,
) -> ScanResult:
    """All roots of ``f`` in [lo, hi] found on a uniform grid of spacing ``step``.

    Every sign change is bisected. With ``cfg.touch_roots`` a same-signed
    local minimum of |f| is refined by golden section: it becomes one root if
    the minimum is within tolerance, or two bisected roots if f crosses zero
    between grid points. ``open_ends`` drops the end points themselves, which
    are usually degenerate limits (E = 0, b = 0, ...).
    """
    step = cfg.bracket_scan_step if step is None else step
    n = max(2, int(math.ceil((hi - lo) / step)))
    xs = np.linspace(lo, hi, n + 1)
    if open_ends:
        xs = xs[1:-1]
    if vectorized:
        fs = np.asarray(f(xs), dtype=float)
    else:
        fs = np.array([f(float(x)) for x in xs])

    def fs_scalar(x):
        return float(f(x))

    result = ScanResult()
    finite = fs[np.isfinite(fs)]
    if finite.size:
        result.extrema = (float(finite.min()), float(finite.max()))

    found = []
    ok = np.isfinite(fs)
    f0, f1 = fs[:-1], fs[1:]
    pair = ok[:-1] & ok[1:]
    found.extend(float(x) for x in xs[:-1][pair & (f0 == 0)])
    for i in np.flatnonzero(pair & (f0 * f1 < 0)):
        found.append(bisect_root(fs_scalar, xs[i], xs[i + 1], cfg))
    if len(xs) and fs[-1] == 0:
        found.append(float(xs[-1]))

    if cfg.touch_roots and len(xs) > 2:
        fm, fc, fp = fs[:-2], fs[1:-1], fs[2:]
        with np.errstate(invalid="ignore"):
            touch = (
                ok[:-2] & ok[1:-1] & ok[2:] & (fc != 0)
                & (fm * fc > 0) & (fc * fp > 0)
                & (np.abs(fc) <= np.abs(fm)) & (np.abs(fc) <= np.abs(fp))
            )
        for i in np.flatnonzero(touch) + 1:
            sign = 1.0 if fs[i] > 0 else -1.0
            xmin, gmin = _golden_min(lambda x: sign * fs_scalar(x), float(xs[i - 1]), float(xs[i + 1]))
            if gmin < 0:
                found.append(bisect_root(fs_scalar, xs[i - 1], xmin, cfg))
                found.append(bisect_root(fs_scalar, xmin, xs[i + 1], cfg))
            elif gmin <= cfg.abs_tolerance:
                found.append(xmin)

    for x in sorted(set(found)):
        r = fs_scalar(x)
        if abs(r) <= cfg.abs_tolerance:
            result.roots.append(x)
            result.residuals.append(r)
        else:
            result.rejected.append((x, r))
    return result
