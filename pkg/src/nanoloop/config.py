"""Run configuration: parsing, validation and the echo used in output headers."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional

from .errors import ConfigError, DomainError
from .physics import PhysicalConstants, constants_from_env
from .solver.roots import RootConfig

MODELS = ("rect", "shorted-rect", "tri", "shorted-tri", "delta", "thz")
FORMATS = ("csv", "json")

_REQUIRED = object()
_FOUR_PI = 4.0 * math.pi

# allowed parameter keys per (model, mode) with defaults; _REQUIRED has no default
PARAMETER_SCHEMAS: Dict[str, Dict[str, Dict[str, Any]]] = {
    "rect": {
        "solve": {"free": _REQUIRED, "a": None, "b": None, "E": None, "V0": None, "window": None},
        "locus": {
            "b_values": _REQUIRED,
            "V0": 1.0,
            "E_values": {"start": 0.01, "stop": 0.99, "step": 0.01},
            "a_max": None,
            "max_jump": 0.1,
        },
    },
    "shorted-rect": {
        "check": {"V0": 1.0, "b_max": 5.0, "n_b": 100, "n_E": 100},
    },
    "tri": {
        "theta": {
            "E_values": {"start": 0.01, "stop": 0.99, "step": 0.01},
            "V0": 1.0,
            "c": 1.0,
            "window": [-_FOUR_PI, 0.0],
        },
        "locus": {
            "c_values": _REQUIRED,
            "V0": 1.0,
            "E_values": {"start": 0.99, "stop": 0.01, "step": -0.01},
            "window": [-_FOUR_PI, 0.0],
        },
    },
    "shorted-tri": {
        "locus": {"ratios": _REQUIRED, "gamma_c_window": [0.5, 12.0], "c": 1.0},
    },
    "delta": {
        "solutions": {
            "ka_values": {"start": 0.001, "stop": 3.14, "step": 0.001},
            "B_family": [],
            "n_max": 1,
        },
    },
    "thz": {
        "trace": {
            "a": _REQUIRED,
            "E": 0.25,
            "V0": 1.0,
            "V1": 0.5,
            "n_steps": 64,
            "coordinate_sign": -1,
            "b_window": None,
        },
        "table": {
            "a_values": [0.25, 0.5, 0.75, 1.0],
            "E": 0.25,
            "V0": 1.0,
            "V1": 0.5,
            "n_steps": 64,
            "coordinate_sign": -1,
            "b_window": None,
            "E_search": [],
            "reference": None,
        },
    },
}

DEFAULT_MODES = {
    "rect": "solve",
    "shorted-rect": "check",
    "tri": "theta",
    "shorted-tri": "locus",
    "delta": "solutions",
    "thz": "trace",
}


def expand_values(value, name: str):
    """A list of numbers, or a {"start", "stop", "step"} range with the stop included."""
    if isinstance(value, Mapping):
        extra = set(value) - {"start", "stop", "step"}
        if extra or len(value) != 3:
            raise ConfigError(f"{name}: range needs exactly start, stop, step")
        start, stop, step = (float(value[k]) for k in ("start", "stop", "step"))
        if step == 0 or (stop - start) * step < 0:
            raise ConfigError(f"{name}: step {step} does not lead from {start} to {stop}")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [round(start + i * step, 12) for i in range(n)]
    if isinstance(value, (list, tuple)):
        out = []
        for v in value:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ConfigError(f"{name}: entries must be finite numbers, got {v!r}")
            out.append(float(v))
        return out
    raise ConfigError(f"{name}: expected a list or a start/stop/step range")


def _number(params, key, positive=False, allow_none=False):
    v = params.get(key)
    if v is None and allow_none:
        return None
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise ConfigError(f"parameter {key!r} must be a finite number, got {v!r}")
    if positive and v <= 0:
        raise ConfigError(f"parameter {key!r} must be > 0, got {v}")
    return float(v)


def _window(params, key):
    w = params.get(key)
    if w is None:
        return None
    if not (isinstance(w, (list, tuple)) and len(w) == 2):
        raise ConfigError(f"parameter {key!r} must be [lo, hi]")
    lo, hi = expand_values(w, key)
    if not lo < hi:
        raise ConfigError(f"parameter {key!r} needs lo < hi, got {w}")
    return [lo, hi]


def _validate(model: str, mode: str, p: Dict[str, Any]) -> None:
    """Domain checks done before any solve."""
    if model == "rect" and mode == "solve":
        free = p["free"]
        if free not in ("a", "b", "E", "V0"):
            raise ConfigError(f"free must be one of a, b, E, V0, got {free!r}")
        for key in ("a", "b", "E", "V0"):
            if key == free:
                if p[key] is not None:
                    raise ConfigError(f"free parameter {key!r} must not be given a value")
                continue
            if p[key] is None:
                raise ConfigError(f"parameter {key!r} is required when solving for {free}")
            _number(p, key)
        if free != "a" and p["a"] < 0:
            raise ConfigError("a is the pre-barrier length and must be >= 0")
        if free != "b" and p["b"] < 0:
            raise ConfigError("b must be >= 0")
        for key in ("E", "V0"):
            if free != key and p[key] <= 0:
                raise ConfigError(f"{key} must be > 0")
        if free not in ("E", "V0") and p["E"] >= p["V0"]:
            raise ConfigError(f"need E < V0, got E={p['E']}, V0={p['V0']}")
        p["window"] = _window(p, "window")
    elif model == "rect":
        p["b_values"] = expand_values(p["b_values"], "b_values")
        if any(b < 0 for b in p["b_values"]):
            raise ConfigError("b_values must be >= 0")
        _number(p, "V0", positive=True)
        expand_values(p["E_values"], "E_values")
        _number(p, "a_max", positive=True, allow_none=True)
        _number(p, "max_jump", positive=True)
    elif model == "shorted-rect":
        _number(p, "V0", positive=True)
        _number(p, "b_max", positive=True)
        for key in ("n_b", "n_E"):
            if not isinstance(p[key], int) or isinstance(p[key], bool) or p[key] < 2:
                raise ConfigError(f"{key} must be an integer >= 2")
    elif model == "tri":
        _number(p, "V0", positive=True)
        if mode == "theta":
            _number(p, "c", positive=True)
        else:
            p["c_values"] = expand_values(p["c_values"], "c_values")
            if any(c <= 0 for c in p["c_values"]):
                raise ConfigError("c_values must be > 0")
        expand_values(p["E_values"], "E_values")
        p["window"] = _window(p, "window")
        if p["window"][1] > 0:
            raise ConfigError("Theta window must lie in Theta <= 0")
    elif model == "shorted-tri":
        p["ratios"] = expand_values(p["ratios"], "ratios")
        p["gamma_c_window"] = _window(p, "gamma_c_window")
        if p["gamma_c_window"][0] <= 0:
            raise ConfigError("gamma_c_window must be positive")
        _number(p, "c", positive=True)
    elif model == "delta":
        expand_values(p["ka_values"], "ka_values")
        p["B_family"] = expand_values(p["B_family"], "B_family")
        if not isinstance(p["n_max"], int) or isinstance(p["n_max"], bool) or p["n_max"] < 1:
            raise ConfigError("n_max must be an integer >= 1")
    elif model == "thz":
        if mode == "trace":
            _number(p, "a", positive=True)
        else:
            p["a_values"] = expand_values(p["a_values"], "a_values")
            if any(a <= 0 for a in p["a_values"]):
                raise ConfigError("a_values must be > 0")
            p["E_search"] = expand_values(p["E_search"], "E_search")
            ref = p["reference"]
            if ref is not None:
                if not (isinstance(ref, list) and len(ref) == len(p["a_values"])):
                    raise ConfigError("reference needs one [min, mid, max] row per a value")
                p["reference"] = [expand_values(r, "reference") for r in ref]
                if any(len(r) != 3 for r in p["reference"]):
                    raise ConfigError("reference rows must be [min, mid, max]")
        _number(p, "E", positive=True)
        _number(p, "V0", positive=True)
        V1 = _number(p, "V1")
        if not 0 <= V1 < p["V0"]:
            raise ConfigError(f"need 0 <= V1 < V0, got V1={V1}")
        if p["E"] >= p["V0"] - V1:
            raise ConfigError(f"E={p['E']} must lie below the potential minimum V0 - V1 = {p['V0'] - V1}")
        if not isinstance(p["n_steps"], int) or isinstance(p["n_steps"], bool) or p["n_steps"] < 4:
            raise ConfigError("n_steps must be an integer >= 4")
        if p["coordinate_sign"] not in (-1, 1):
            raise ConfigError("coordinate_sign must be -1 or 1")
        p["b_window"] = _window(p, "b_window")


@dataclass(frozen=True)
class RunConfig:
    model: str
    mode: str
    parameters: Dict[str, Any]
    solver: RootConfig = field(default_factory=RootConfig)
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    output_path: Optional[str] = None
    output_format: str = "csv"

    def echo(self) -> dict:
        """Everything needed to reproduce the run; the output path is left out so reruns elsewhere match."""
        return {
            "model": self.model,
            "mode": self.mode,
            "parameters": self.parameters,
            "solver": self.solver.to_dict(),
            "constants": self.constants.to_dict(),
            "output": {"format": self.output_format},
        }


def _solver_from(data) -> RootConfig:
    if data is None:
        return RootConfig()
    if not isinstance(data, Mapping):
        raise ConfigError("solver must be an object")
    allowed = set(RootConfig().to_dict())
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown solver keys: {sorted(unknown)}")
    try:
        return RootConfig(**data)
    except (TypeError, DomainError) as exc:
        raise ConfigError(f"solver: {exc}") from exc


def config_from_mapping(data: Mapping, environ: Optional[Mapping] = None) -> RunConfig:
    if not isinstance(data, Mapping):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - {"model", "mode", "parameters", "solver", "constants", "output"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    model = data.get("model")
    if model not in MODELS:
        raise ConfigError(f"model must be one of {list(MODELS)}, got {model!r}")
    mode = data.get("mode", DEFAULT_MODES[model])
    schema = PARAMETER_SCHEMAS[model].get(mode)
    if schema is None:
        raise ConfigError(f"model {model!r} has no mode {mode!r}; choose from {sorted(PARAMETER_SCHEMAS[model])}")
    given = data.get("parameters", {})
    if not isinstance(given, Mapping):
        raise ConfigError("parameters must be an object")
    unknown = set(given) - set(schema)
    if unknown:
        raise ConfigError(f"unknown parameters for {model}/{mode}: {sorted(unknown)}")
    params = {}
    for key, default in schema.items():
        if key in given:
            params[key] = given[key]
        elif default is _REQUIRED:
            raise ConfigError(f"missing required parameter {key!r} for {model}/{mode}")
        else:
            params[key] = json.loads(json.dumps(default))
    _validate(model, mode, params)

    if "constants" in data:
        try:
            constants = PhysicalConstants.from_mapping({"constants": data["constants"]})
        except (DomainError, ValueError, TypeError) as exc:
            raise ConfigError(f"constants: {exc}") from exc
    else:
        constants = constants_from_env(environ)

    output = data.get("output", {})
    if not isinstance(output, Mapping) or set(output) - {"path", "format"}:
        raise ConfigError("output takes only 'path' and 'format'")
    fmt = output.get("format", "csv")
    if fmt not in FORMATS:
        raise ConfigError(f"output format must be csv or json, got {fmt!r}")
    return RunConfig(model, mode, params, _solver_from(data.get("solver")), constants, output.get("path"), fmt)


def parse_config_text(text: str, source: str = "<config>") -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_config(path, environ: Optional[Mapping] = None) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return config_from_mapping(parse_config_text(text, str(path)), environ)
