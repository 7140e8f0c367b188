"""Command-line entry point.

Exit codes: 0 success, 2 partial (skipped points or residuals above tolerance),
3 configuration error, 4 solver failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from typing import Dict, List, Optional

from . import __version__
from .airy import airy_eval
from .config import RunConfig, config_from_mapping, load_config
from .errors import ConfigError, NanoloopError, SolverError
from .figures import CONVENTIONS, FIGURES, emit_figure_dataset
from .runner import STATUS_OK, render, write_atomic, run

EXIT_OK, EXIT_PARTIAL, EXIT_CONFIG, EXIT_SOLVER = 0, 2, 3, 4

# subcommand -> (model, mode)
COMMANDS = {
    "rect-solve": ("rect", "solve"),
    "rect-locus": ("rect", "locus"),
    "tri-theta": ("tri", "theta"),
    "tri-locus": ("tri", "locus"),
    "shorted-tri-locus": ("shorted-tri", "locus"),
    "delta": ("delta", "solutions"),
    "thz-sweep": ("thz", "trace"),
}


def _range(text: str):
    """'start:stop:step' or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError("range must be start:stop:step")
        start, stop, step = (float(x) for x in parts)
        return {"start": start, "stop": stop, "step": step}
    return _list(text)


def _list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _common(parser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--config", default=d, help="JSON run configuration")
    parser.add_argument("--out", default=d, help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default=d)
    parser.add_argument("--tolerance", type=float, default=d, help="|Det| acceptance threshold (default 1e-9)")
    parser.add_argument("--scan-step", type=float, default=d, help="bracket scan spacing")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="nanoloop", description="Solution sets of shunted tunneling-junction models.")
    top.add_argument("--version", action="version", version=f"nanoloop {__version__}")
    _common(top, suppress=False)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        return p

    p = add("airy", "evaluate Ai, Bi and their derivatives")
    p.add_argument("--x", type=float, nargs="+", required=True)

    p = add("rect-solve", "solve one of a, b, E, V0 for the rectangular barrier")
    p.add_argument("--free", choices=("a", "b", "E", "V0"))
    p.add_argument("--a", type=float, help="pre-barrier length |a| in nm")
    p.add_argument("--b", type=float)
    p.add_argument("--E", type=float)
    p.add_argument("--V0", type=float)
    p.add_argument("--window", type=float, nargs=2, metavar=("LO", "HI"))

    p = add("rect-locus", "a(E) loci for several barrier lengths")
    p.add_argument("--b-values", type=_list)
    p.add_argument("--V0", type=float)
    p.add_argument("--E-values", type=_range, help="start:stop:step or a,b,c")
    p.add_argument("--a-max", type=float)

    p = add("tri-theta", "Theta roots of the triangular barrier over an energy sweep")
    p.add_argument("--E-values", type=_range)
    p.add_argument("--V0", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--window", type=float, nargs=2, metavar=("LO", "HI"))

    p = add("tri-locus", "(E, a) sets per barrier base c")
    p.add_argument("--c-values", type=_range)
    p.add_argument("--V0", type=float)
    p.add_argument("--E-values", type=_range)
    p.add_argument("--window", type=float, nargs=2, metavar=("LO", "HI"))

    p = add("shorted-tri-locus", "roots of the shorted triangular barrier along E/V0 rays")
    p.add_argument("--ratios", type=_range)
    p.add_argument("--gamma-c-window", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--c", type=float)

    p = add("delta", "delta-barrier loop coefficients")
    p.add_argument("--ka-values", type=_range)
    p.add_argument("--B-family", type=_list)
    p.add_argument("--n-max", type=int)

    p = add("thz-sweep", "quasi-static barrier length over one drive period")
    p.add_argument("--a", type=float, help="pre-barrier length in nm")
    p.add_argument("--E", type=float)
    p.add_argument("--V0", type=float)
    p.add_argument("--V1", type=float)
    p.add_argument("--n-steps", type=int)
    p.add_argument("--coordinate-sign", type=int, choices=(-1, 1))

    p = add("figure", "emit the dataset behind a figure or table")
    p.add_argument("figure_id", choices=FIGURES)
    p.add_argument("--convention", choices=CONVENTIONS, default="physical")
    return top


_FLAG_KEYS = {
    "free": "free", "a": "a", "b": "b", "E": "E", "V0": "V0", "V1": "V1", "c": "c",
    "window": "window", "b_values": "b_values", "E_values": "E_values", "a_max": "a_max",
    "c_values": "c_values", "ratios": "ratios", "gamma_c_window": "gamma_c_window",
    "ka_values": "ka_values", "B_family": "B_family", "n_max": "n_max", "n_steps": "n_steps",
    "coordinate_sign": "coordinate_sign",
}


def _solver_overrides(args) -> Dict[str, float]:
    out = {}
    if getattr(args, "tolerance", None) is not None:
        out["abs_tolerance"] = args.tolerance
    if getattr(args, "scan_step", None) is not None:
        out["bracket_scan_step"] = args.scan_step
    return out


def _model_config(args) -> RunConfig:
    model, mode = COMMANDS[args.command]
    if getattr(args, "config", None):
        base = load_config(args.config).echo()
        if (base["model"], base["mode"]) != (model, mode):
            raise ConfigError(f"config is for {base['model']}/{base['mode']}, not {args.command}")
        data = {"model": model, "mode": mode, "parameters": dict(base["parameters"]),
                "solver": base["solver"], "constants": base["constants"], "output": base["output"]}
    else:
        data = {"model": model, "mode": mode, "parameters": {}}
    for attr, key in _FLAG_KEYS.items():
        value = getattr(args, attr, None)
        if value is not None:
            data["parameters"][key] = list(value) if isinstance(value, tuple) else value
    data["solver"] = {**data.get("solver", {}), **_solver_overrides(args)}
    if getattr(args, "format", None):
        data["output"] = {"format": args.format}
    return config_from_mapping(data)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _airy(args) -> int:
    lines = [f"# nanoloop v{__version__}", "x,ai,bi,ai_prime,bi_prime,wronskian_residual"]
    for x in args.x:
        q = airy_eval(x)
        w = q.ai * q.bi_prime - q.ai_prime * q.bi - 1.0 / math.pi
        lines.append(",".join(format(v, ".17g") for v in (x, q.ai, q.bi, q.ai_prime, q.bi_prime, w)))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "airy":
            return _airy(args)
        if args.command == "figure":
            env = emit_figure_dataset(args.figure_id, args.convention, _solver_overrides(args),
                                      output_format=args.format or "csv")
        else:
            env = run(_model_config(args), write=False)
        _emit(render(env), args.out)
    except ConfigError as exc:
        print(f"nanoloop: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SolverError as exc:
        print(f"nanoloop: solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (NanoloopError, ValueError) as exc:
        print(f"nanoloop: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if env.status != STATUS_OK:
        print(f"nanoloop: partial result, {len(env.skipped)} point(s) skipped", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
