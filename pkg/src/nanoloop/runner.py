"""Dispatch a RunConfig to the solvers and serialise the result."""

from __future__ import annotations

import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .config import RunConfig, expand_values
from .errors import NoRootInWindowError, PoleError, SolverError
from .models.delta import (
    delta_solution,
    derivative_closure_residual,
    quadratic_constraint_residual,
    value_closure_residual,
)
from .models.rect import rect_det_kernel
from .solver import (
    quasistatic_sweep,
    rect_free_function,
    solve_rect_fourth,
    trace_rect_locus,
    trace_shorted_tri,
    trace_tri_locus,
    tri_theta_sweep,
)

STATUS_OK = "ok"
STATUS_PARTIAL = "partial"


@dataclass
class ResultEnvelope:
    config: RunConfig
    columns: List[str]
    rows: List[List[Any]]
    residual_column: Optional[str] = "det_residual"
    skipped: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def residual_summary(self) -> Optional[float]:
        """max |residual| over the rows, or None for datasets that are not root sets."""
        if self.residual_column is None or not self.rows:
            return None
        i = self.columns.index(self.residual_column)
        return max(abs(r[i]) for r in self.rows)

    @property
    def status(self) -> str:
        worst = self.residual_summary
        if self.skipped or (worst is not None and not worst <= self.config.solver.abs_tolerance):
            return STATUS_PARTIAL
        return STATUS_OK

    def header(self) -> dict:
        return {
            "config": self.config.echo(),
            "kinetic_factor": self.config.constants.kinetic_factor,
            "residual_summary": self.residual_summary,
            "skipped": self.skipped,
            "status": self.status,
            "summary": self.summary,
            "version": __version__,
        }

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows])


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _clean(obj):
    """Plain JSON types; non-finite floats become strings so the output stays valid JSON."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else repr(v)
    return str(obj)


def _dumps(obj, **kw) -> str:
    return json.dumps(_clean(obj), sort_keys=True, ensure_ascii=True, allow_nan=False, **kw)


def render(env: ResultEnvelope, fmt: Optional[str] = None) -> str:
    fmt = fmt or env.config.output_format
    if fmt == "json":
        doc = dict(env.header())
        doc["columns"] = env.columns
        doc["rows"] = env.rows
        return _dumps(doc, indent=1) + "\n"
    buf = io.StringIO(newline="")
    buf.write(f"# nanoloop v{__version__}\n")
    buf.write("# " + _dumps(env.header(), separators=(",", ":")) + "\n")
    buf.write(",".join(env.columns) + "\n")
    for row in env.rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def write_atomic(path, text: str) -> None:
    """Write via a temporary file in the target directory, then rename over the target."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".nanoloop-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _skip(**kw) -> Dict[str, Any]:
    return kw


def _run_rect(cfg: RunConfig) -> ResultEnvelope:
    p, solver, const = cfg.parameters, cfg.solver, cfg.constants
    cols = ["E_eV", "V0_V", "a_nm", "b_nm", "det_residual"]
    if cfg.mode == "solve":
        free = p["free"]
        fixed = {k: float(p[k]) for k in ("a", "b", "E", "V0") if k != free}
        if "a" in fixed:
            fixed["a"] = -fixed["a"]  # pre-barrier length -> coordinate
        window = p["window"]
        if window is not None and free == "a":
            window = (-window[1], -window[0])
        try:
            roots = solve_rect_fourth(fixed, free, solver, window, const)
        except SolverError as exc:
            exc.point = {**fixed, **exc.point}
            raise
        f = rect_free_function(free, fixed, const)
        rows = []
        for x in roots:
            vals = dict(fixed, **{free: x})
            rows.append([vals["E"], vals["V0"], vals["a"], vals["b"], float(f(x))])
        return ResultEnvelope(cfg, cols, rows)

    E_values = expand_values(p["E_values"], "E_values")
    window = None if p["a_max"] is None else (-p["a_max"], 0.0)
    loci = trace_rect_locus(p["b_values"], p["V0"], E_values, solver, window, p["max_jump"], const)
    rows, skipped = [], []
    for locus in loci:
        b, V0 = locus.fixed["b"], locus.fixed["V0"]
        for pt in locus.points:
            rows.append([pt.swept, V0, pt.solved, b, pt.residual, pt.branch_jump])
        skipped.extend(_skip(b=b, E=E, reason=msg) for E, msg in locus.skipped)
    jumps = sum(1 for r in rows if r[-1])
    return ResultEnvelope(cfg, cols + ["branch_jump"], rows, skipped=skipped, summary={"branch_jumps": jumps})


def _run_shorted_rect(cfg: RunConfig) -> ResultEnvelope:
    p, kf = cfg.parameters, cfg.constants.kinetic_factor
    V0 = p["V0"]
    b = np.linspace(0.0, p["b_max"], p["n_b"] + 1)[1:]
    E = V0 * np.arange(1, p["n_E"] + 1) / (p["n_E"] + 1)
    rows = []
    for Ei in E:
        k, beta = math.sqrt(kf * Ei), math.sqrt(kf * (V0 - Ei))
        vals = rect_det_kernel(k, beta, 0.0, b)
        rows.extend([float(bi), float(Ei), V0, float(v)] for bi, v in zip(b, vals))
    worst = max(r[3] for r in rows)
    summary = {"max_check_value": worst, "nonnegative_points": int(sum(1 for r in rows if r[3] >= 0))}
    return ResultEnvelope(cfg, ["b_nm", "E_eV", "V0_V", "check_value"], rows, residual_column=None, summary=summary)


TRI_COLUMNS = ["E_eV", "V0_V", "c_nm", "branch", "family", "theta_rad", "theta_deg", "a_nm", "det_residual"]
TRI_LOCUS_COLUMNS = ["E_eV", "V0_V", "c_nm", "family", "rank", "theta_rad", "theta_deg", "a_nm", "det_residual"]

# the period centred on Theta = -2 pi, where the reference curves lie
PRINCIPAL_PERIOD = (-3.0 * math.pi, -math.pi)


def _stats(values) -> Dict[str, float]:
    v = np.array(values, dtype=float)
    return {
        "count": int(v.size),
        "mean_deg": float(v.mean()) if v.size else None,
        "std_deg": float(v.std(ddof=1)) if v.size > 1 else None,
    }


def theta_branch_stats(roots) -> Dict[str, Any]:
    """Theta statistics in degrees (std with ddof 1), by branch index and by family.

    The family statistics use each family's roots in the principal period
    (-3 pi, -pi].
    """
    by_branch: Dict[int, List[float]] = {}
    by_family: Dict[int, List[float]] = {1: [], -1: []}
    lo, hi = PRINCIPAL_PERIOD
    for r in roots:
        by_branch.setdefault(r.branch, []).append(math.degrees(r.theta))
        if lo < r.theta <= hi:
            by_family[r.family].append(math.degrees(r.theta))
    return {
        "branches": {str(b): _stats(v) for b, v in sorted(by_branch.items())},
        "principal_period": {"falling": _stats(by_family[-1]), "rising": _stats(by_family[1])},
    }


def _run_tri(cfg: RunConfig) -> ResultEnvelope:
    p, solver, const = cfg.parameters, cfg.solver, cfg.constants
    E_values = expand_values(p["E_values"], "E_values")
    window = tuple(p["window"])
    if cfg.mode == "theta":
        roots, skip = tri_theta_sweep(E_values, p["V0"], p["c"], window, solver, const)
        rows = [[r.E, r.V0, r.c, r.branch, r.family, r.theta, math.degrees(r.theta), r.a, r.residual] for r in roots]
        skipped = [_skip(E=E, c=p["c"], reason=msg) for E, msg in skip]
        return ResultEnvelope(cfg, TRI_COLUMNS, rows, skipped=skipped, summary=theta_branch_stats(roots))
    loci, skip = trace_tri_locus(p["V0"], p["c_values"], E_values, window, solver, const)
    rows = []
    for locus in loci:
        c, family, rank = locus.fixed["c"], locus.fixed["family"], locus.fixed["rank"]
        for pt in locus.points:
            E = pt.swept
            theta = pt.solved * math.sqrt(const.kinetic_factor * E)
            rows.append([E, p["V0"], c, family, rank, theta, math.degrees(theta), pt.solved, pt.residual])
    skipped = [_skip(E=E, c=c, reason=msg) for E, c, msg in skip]
    return ResultEnvelope(cfg, TRI_LOCUS_COLUMNS, rows, skipped=skipped)


def _run_shorted_tri(cfg: RunConfig) -> ResultEnvelope:
    p = cfg.parameters
    roots, skip = trace_shorted_tri(p["ratios"], tuple(p["gamma_c_window"]), cfg.solver, p["c"], cfg.constants)
    cols = ["ratio", "gamma_c", "K", "X", "c_nm", "gamma_per_nm", "V0_V", "E_eV", "b_nm", "det_residual"]
    rows = [[r.ratio, r.gamma_c, r.K, r.X, r.c, r.gamma, r.V0, r.E, r.b, r.residual] for r in roots]
    skipped = [_skip(ratio=r, reason=msg) for r, msg in skip]
    return ResultEnvelope(cfg, cols, rows, skipped=skipped)


def _run_delta(cfg: RunConfig) -> ResultEnvelope:
    p = cfg.parameters
    cols = ["ka", "family", "A", "B", "C", "D", "value_residual", "derivative_residual", "quadratic_residual", "det_residual"]
    rows, skipped = [], []

    def add(ka, coeffs, family):
        v = value_closure_residual(coeffs, ka)
        d = derivative_closure_residual(coeffs, ka)
        q = quadratic_constraint_residual(coeffs)
        rows.append([ka, family, coeffs.A, coeffs.B, coeffs.C, coeffs.D, v, d, q, max(abs(v), abs(d))])

    for ka in expand_values(p["ka_values"], "ka_values"):
        try:
            sol = delta_solution(ka)
        except PoleError as exc:
            skipped.append(_skip(ka=ka, reason=str(exc)))
            continue
        if sol.family:
            continue  # emitted below with explicit B values
        add(ka, sol.coefficients(), "generic")
    for n in range(1, p["n_max"] + 1):
        ka = n * math.pi
        for B in p["B_family"]:
            add(ka, delta_solution(ka, atol=1e-9).coefficients(B), "n_pi")
    return ResultEnvelope(cfg, cols, rows, skipped=skipped)


def table_row(trace) -> List[float]:
    lo, mid, hi = trace.extrema()
    return [lo, mid, hi]


def _thz_trace(p, a, E, cfg):
    return quasistatic_sweep(
        a, E, p["V0"], p["V1"], p["n_steps"], cfg.solver, cfg.constants, p["coordinate_sign"], p["b_window"]
    )


def _run_thz(cfg: RunConfig) -> ResultEnvelope:
    p = cfg.parameters
    if cfg.mode == "trace":
        trace = _thz_trace(p, p["a"], p["E"], cfg)
        rows = [[s.omega_t, s.V, s.b, s.residual] for s in trace.samples]
        skipped = [] if trace.complete else [_skip(a=p["a"], E=p["E"], reason=trace.diagnostic)]
        summary = {}
        if trace.samples:
            lo, mid, hi = trace.extrema()
            summary = {"b_min": lo, "b_mid": mid, "b_max": hi}
        return ResultEnvelope(cfg, ["omega_t_rad", "V_volts", "b_nm", "det_residual"], rows, skipped=skipped, summary=summary)

    cols = ["pre_barrier_nm", "b_min_nm", "b_mid_nm", "b_max_nm", "symmetry_residual", "det_residual"]
    rows, skipped = [], []
    for a in p["a_values"]:
        trace = _thz_trace(p, a, p["E"], cfg)
        if not trace.complete or not trace.samples:
            skipped.append(_skip(a=a, E=p["E"], reason=trace.diagnostic))
            continue
        lo, mid, hi = table_row(trace)
        worst = max(abs(s.residual) for s in trace.samples)
        rows.append([a, lo, mid, hi, mid - 0.5 * (lo + hi), worst])
    summary: Dict[str, Any] = {"E": p["E"]}
    if p["E_search"] and p["reference"] is not None:
        summary["E_search"] = table_fit(p, cfg)
    return ResultEnvelope(cfg, cols, rows, skipped=skipped, summary=summary)


def table_fit(p, cfg) -> Dict[str, Any]:
    """Max deviation from the reference table for each candidate E; invalid E are listed as skipped."""
    errors, invalid = {}, []
    for E in p["E_search"]:
        if E >= p["V0"] - p["V1"]:
            invalid.append(E)
            continue
        worst = 0.0
        for a, ref in zip(p["a_values"], p["reference"]):
            trace = _thz_trace(p, a, E, cfg)
            if not trace.complete:
                worst = math.inf
                break
            worst = max(worst, max(abs(x - y) for x, y in zip(table_row(trace), ref)))
        errors[format(E, ".17g")] = worst
    finite = {k: v for k, v in errors.items() if math.isfinite(v)}
    best = min(finite, key=lambda k: (finite[k], float(k))) if finite else None
    return {
        "max_error_by_E": errors,
        "invalid_E": invalid,
        "best_E": None if best is None else float(best),
        "best_max_error": None if best is None else finite[best],
    }


_DISPATCH = {
    "rect": _run_rect,
    "shorted-rect": _run_shorted_rect,
    "tri": _run_tri,
    "shorted-tri": _run_shorted_tri,
    "delta": _run_delta,
    "thz": _run_thz,
}


def run(cfg: RunConfig, write: bool = True) -> ResultEnvelope:
    """Solve, and write the output file when the config names one."""
    env = _DISPATCH[cfg.model](cfg)
    if write and cfg.output_path:
        write_atomic(cfg.output_path, render(env))
    return env


__all__ = [
    "NoRootInWindowError",
    "ResultEnvelope",
    "STATUS_OK",
    "STATUS_PARTIAL",
    "render",
    "run",
    "table_fit",
    "theta_branch_stats",
    "write_atomic",
]
