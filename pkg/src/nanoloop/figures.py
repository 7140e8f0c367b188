"""Named reference datasets (``fig2`` ... ``fig14``, ``table1``).

Two conventions are offered. ``physical`` uses CODATA constants with lengths
in nm and the pre-barrier at negative coordinates. ``picometre`` uses the
picometre kinetic factor and, for the THz sweeps, a positive pre-barrier
coordinate; under it the reference Theta statistics and b(t) extrema are
reproduced (see README).
"""

from __future__ import annotations

import math
from typing import Optional

from .config import RunConfig, config_from_mapping
from .physics import PICOMETRE_UNITS
from .runner import ResultEnvelope, run

FIGURES = ("fig2", "fig4", "fig5", "fig7", "fig8", "fig9", "fig11", "fig12", "fig13", "fig14", "table1")
CONVENTIONS = ("physical", "picometre")

# reference extrema: min, mid, max of b (nm) for pre-barrier lengths 0.25 ... 1.0 nm
TABLE_I = (
    (0.2500000170, 0.2500000341, 0.2500000512),
    (0.5000001366, 0.5000002734, 0.5000004101),
    (0.7500004614, 0.7500009228, 0.7500013842),
    (1.0000010937, 1.0000021874, 1.0000032811),
)
TABLE_I_PRE_BARRIER = (0.25, 0.5, 0.75, 1.0)
TABLE_I_E_SEARCH = [round(0.1 * i, 1) for i in range(1, 10)]

_E_UP = {"start": 0.01, "stop": 0.99, "step": 0.01}
_E_DOWN = {"start": 0.99, "stop": 0.01, "step": -0.01}
_THZ = {"fig11": 0.25, "fig12": 0.5, "fig13": 0.75, "fig14": 1.0}


def figure_config(figure_id: str, convention: str = "physical", solver: Optional[dict] = None, output_format: str = "csv") -> RunConfig:
    if figure_id not in FIGURES:
        raise ValueError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURES)}")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    sign = 1 if convention == "picometre" else -1
    if figure_id == "fig2":
        data = {"model": "rect", "mode": "locus",
                "parameters": {"b_values": [0.1, 0.2, 0.3, 0.4, 0.5], "V0": 1.0, "E_values": _E_UP}}
    elif figure_id == "fig4":
        data = {"model": "tri", "mode": "theta",
                "parameters": {"E_values": _E_UP, "V0": 1.0, "c": 1.0, "window": [-4.0 * math.pi, 0.0]}}
    elif figure_id == "fig5":
        data = {"model": "tri", "mode": "locus",
                "parameters": {"c_values": [0.5, 1.0, 1.5, 2.0], "V0": 1.0, "E_values": _E_DOWN,
                               "window": [-4.0 * math.pi, 0.0]}}
    elif figure_id in ("fig7", "fig9"):
        data = {"model": "shorted-tri", "mode": "locus",
                "parameters": {"ratios": {"start": 0.02, "stop": 0.98, "step": 0.02}, "gamma_c_window": [0.5, 12.0], "c": 1.0},
                "solver": {"bracket_scan_step": 0.01}}
    elif figure_id == "fig8":
        data = {"model": "shorted-tri", "mode": "locus",
                "parameters": {"ratios": [j / 17 for j in range(1, 17)], "gamma_c_window": [0.5, 12.0], "c": 1.0},
                "solver": {"bracket_scan_step": 0.01}}
    elif figure_id in _THZ:
        data = {"model": "thz", "mode": "trace",
                "parameters": {"a": _THZ[figure_id], "E": 0.25, "V0": 1.0, "V1": 0.5, "n_steps": 64,
                               "coordinate_sign": sign}}
    else:
        data = {"model": "thz", "mode": "table",
                "parameters": {"a_values": list(TABLE_I_PRE_BARRIER), "E": 0.25, "V0": 1.0, "V1": 0.5, "n_steps": 64,
                               "coordinate_sign": sign, "E_search": TABLE_I_E_SEARCH,
                               "reference": [list(r) for r in TABLE_I]}}
    merged = dict(data.get("solver", {}))
    merged.update(solver or {})
    data["solver"] = merged
    if convention == "picometre":
        data["constants"] = PICOMETRE_UNITS.to_dict()
    data["output"] = {"format": output_format}
    return config_from_mapping(data)


def emit_figure_dataset(
    figure_id: str,
    convention: str = "physical",
    solver: Optional[dict] = None,
    output_path: Optional[str] = None,
    output_format: str = "csv",
) -> ResultEnvelope:
    cfg = figure_config(figure_id, convention, solver, output_format)
    if output_path is not None:
        cfg = RunConfig(cfg.model, cfg.mode, cfg.parameters, cfg.solver, cfg.constants, output_path, cfg.output_format)
    return run(cfg)
