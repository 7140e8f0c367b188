"""Boundary matrices, determinants, coefficients and wavefunctions for the five loop models."""

from .common import WaveCoefficients, WavefunctionSample
from .delta import (
    DeltaSolution,
    delta_solution,
    delta_wavefunction,
    derivative_closure_residual,
    quadratic_constraint_residual,
    value_closure_residual,
)
from .rect import (
    rect_coefficients,
    rect_coefficients_closed_form,
    rect_det_kernel,
    rect_determinant,
    rect_matrix,
    rect_wavefunction,
    shorted_rect_check,
)
from .tri import (
    shorted_tri_determinant,
    tri_coefficients,
    tri_determinant,
    tri_matrix,
    tri_theta_function,
    tri_theta_slope,
    tri_wavefunction,
)

__all__ = [
    "DeltaSolution",
    "WaveCoefficients",
    "WavefunctionSample",
    "delta_solution",
    "delta_wavefunction",
    "derivative_closure_residual",
    "quadratic_constraint_residual",
    "rect_coefficients",
    "rect_coefficients_closed_form",
    "rect_det_kernel",
    "rect_determinant",
    "rect_matrix",
    "rect_wavefunction",
    "shorted_rect_check",
    "shorted_tri_determinant",
    "tri_coefficients",
    "tri_determinant",
    "tri_matrix",
    "tri_theta_function",
    "tri_theta_slope",
    "tri_wavefunction",
    "value_closure_residual",
]
