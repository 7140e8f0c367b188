from .loci import (
    DEFAULT_THETA_WINDOW,
    LocusPoint,
    ShortedTriRoot,
    SolutionLocus,
    ThetaRoot,
    rect_free_function,
    solve_rect_fourth,
    solve_tri_theta,
    trace_rect_locus,
    trace_shorted_tri,
    trace_tri_locus,
    tri_theta_sweep,
)
from .roots import DEFAULT_CONFIG, RootConfig, ScanResult, bisect_root, scan_roots
from .thz import QuasiStaticSample, QuasiStaticTrace, drive_sine, quasistatic_sweep

__all__ = [
    "DEFAULT_CONFIG",
    "DEFAULT_THETA_WINDOW",
    "LocusPoint",
    "QuasiStaticSample",
    "QuasiStaticTrace",
    "RootConfig",
    "ScanResult",
    "ShortedTriRoot",
    "SolutionLocus",
    "ThetaRoot",
    "bisect_root",
    "drive_sine",
    "quasistatic_sweep",
    "rect_free_function",
    "scan_roots",
    "solve_rect_fourth",
    "solve_tri_theta",
    "trace_rect_locus",
    "trace_shorted_tri",
    "trace_tri_locus",
    "tri_theta_sweep",
]
