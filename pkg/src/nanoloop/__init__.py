"""Solution sets of shunted (closed-loop) tunneling-junction models."""

__version__ = "0.1.0"

from .airy import AiryQuad, airy_eval
from .physics import (
    CODATA_2018,
    PICOMETRE_UNITS,
    DerivedParameters,
    PhysicalConstants,
    RectParams,
    TriParams,
    derive_rect,
    derive_tri,
    potential_from_gamma,
    tunneling_length,
)

__all__ = [
    "AiryQuad",
    "CODATA_2018",
    "DerivedParameters",
    "PICOMETRE_UNITS",
    "PhysicalConstants",
    "RectParams",
    "TriParams",
    "airy_eval",
    "derive_rect",
    "derive_tri",
    "potential_from_gamma",
    "tunneling_length",
]
