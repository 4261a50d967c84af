"""Command-line front end.

Subcommands: validate, analyze, bounds, sweep-theta, sweep-damping, verify.
Exit codes: 0 success, 1 validation or assertion failure, 2 usage or parse
error. Sweep settings follow the precedence CLI flags > config file >
defaults, and the effective configuration is echoed as '#' comments in the
CSV output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bounds import krishna_bound, min_device_uncertainty, pair_bound_report
from .errors import ParseError, ValidationError
from .serialize import load_povm, load_state
from .suites import SUITES, run_suite
from .sweeps import SweepConfig, damping_sweep, theta_sweep
from .uncertainty import device_uncertainty, outcome_probs, quantum_uncertainty, shannon_entropy

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit_error(kind: str, message: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"error": kind, "message": message}))
    else:
        print(f"{kind}: {message}", file=sys.stderr)


def _load_inputs(loader, path, as_json: bool):
    """Load a JSON input file, mapping failures to (payload, exit_code)."""
    try:
        return loader(path), None
    except (OSError, json.JSONDecodeError, ParseError) as exc:
        _emit_error("ParseError", f"{path}: {exc}", as_json)
        return None, EXIT_USAGE
    except ValidationError as exc:
        _emit_error(type(exc).__name__, f"{path}: {exc}", as_json)
        return None, EXIT_FAIL


def cmd_validate(args) -> int:
    povm, code = _load_inputs(load_povm, args.povm, args.json)
    if povm is None:
        return code
    payload = {
        "valid": True,
        "dim": povm.dim,
        "n_outcomes": povm.n_outcomes,
        "spectra": [[float(x) for x in dec.eigenvalues] for dec in povm.spectra],
        "completeness_residual": povm.completeness_residual(),
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"dim={povm.dim} outcomes={povm.n_outcomes}")
        for i, spectrum in enumerate(payload["spectra"]):
            print(f"effect {i}: eigenvalues [{', '.join(f'{x:.12g}' for x in spectrum)}]")
        print(f"completeness residual: {payload['completeness_residual']:.3e}")
        print("OK")
    return EXIT_OK


def cmd_analyze(args) -> int:
    povm, code = _load_inputs(load_povm, args.povm, args.format == "json")
    if povm is None:
        return code
    rho, code = _load_inputs(load_state, args.state, args.format == "json")
    if rho is None:
        return code
    try:
        row = {
            "dim": povm.dim,
            "H": shannon_entropy(outcome_probs(rho, povm)),
            "D": device_uncertainty(rho, povm),
            "Q": quantum_uncertainty(rho, povm),
            "krishna": krishna_bound(povm),
            "minD": min_device_uncertainty(povm),
        }
    except ValidationError as exc:
        _emit_error(type(exc).__name__, str(exc), args.format == "json")
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(row))
    else:
        print(",".join(row))
        print(",".join(f"{row[key]:.12g}" if key != "dim" else str(row[key]) for key in row))
    return EXIT_OK


def cmd_bounds(args) -> int:
    povm_a, code = _load_inputs(load_povm, args.povm_a, True)
    if povm_a is None:
        return code
    povm_b, code = _load_inputs(load_povm, args.povm_b, True)
    if povm_b is None:
        return code
    rho = None
    if args.state is not None:
        rho, code = _load_inputs(load_state, args.state, True)
        if rho is None:
            return code
    try:
        report = pair_bound_report(povm_a, povm_b, rho)
    except ValidationError as exc:
        _emit_error(type(exc).__name__, str(exc), True)
        return EXIT_FAIL
    print(json.dumps(report.to_dict()))
    return EXIT_OK


def _config_value(args, config: dict, key: str, default):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in config:
        return config[key]
    return default


def _sweep_config(args, kind: str) -> SweepConfig:
    config = {}
    if args.config is not None:
        with open(args.config, encoding="utf-8") as handle:
            config = json.load(handle)
        if not isinstance(config, dict):
            raise ValueError("config file must contain a JSON object")
    if kind == "theta":
        return SweepConfig(
            kind="theta",
            start=float(_config_value(args, config, "start", 0.0)),
            stop=float(_config_value(args, config, "stop", float(np.pi))),
            steps=int(_config_value(args, config, "steps", 181)),
            eta=_maybe_float(_config_value(args, config, "eta", None)),
            zeta=_maybe_float(_config_value(args, config, "zeta", None)),
            seed=int(_config_value(args, config, "seed", 0)),
            out=_config_value(args, config, "out", None),
        )
    return SweepConfig(
        kind="damping",
        start=float(_config_value(args, config, "start", 0.0)),
        stop=float(_config_value(args, config, "stop", 1.0)),
        steps=int(_config_value(args, config, "steps", 101)),
        seed=int(_config_value(args, config, "seed", 0)),
        out=_config_value(args, config, "out", None),
    )


def _maybe_float(value):
    return None if value is None else float(value)


def _run_sweep(args, kind: str) -> int:
    try:
        config = _sweep_config(args, kind)
        if config.out is None:
            raise ValueError("an output path is required (--out or config file)")
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        _emit_error("ConfigError", str(exc), False)
        return EXIT_USAGE
    result = theta_sweep(config) if kind == "theta" else damping_sweep(config)
    result.write_csv(config.out)
    for name, points in result.crossovers.items():
        formatted = ", ".join(f"{x:.4f}" for x in points) if points else "none"
        print(f"crossover {name}: {formatted}")
    print(f"wrote {len(result.rows)} rows to {config.out}")
    return EXIT_OK


def cmd_sweep_theta(args) -> int:
    return _run_sweep(args, "theta")


def cmd_sweep_damping(args) -> int:
    return _run_sweep(args, "damping")


def cmd_verify(args) -> int:
    try:
        result = run_suite(args.suite, args.trials, args.seed)
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        _emit_error("ConfigError", str(message), False)
        return EXIT_USAGE
    print(result.summary())
    for message in result.messages:
        print(f"  {message}")
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unsharp",
        description="Measurement unsharpness and entropic uncertainty bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a POVM JSON file")
    p.add_argument("povm")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="entropy report for one POVM and state")
    p.add_argument("povm")
    p.add_argument("--state", required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bound report for a POVM pair")
    p.add_argument("povm_a")
    p.add_argument("povm_b")
    p.add_argument("--state")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep-theta", help="angle sweep of the spin-pair bounds")
    p.add_argument("--eta", type=float)
    p.add_argument("--zeta", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--config", help="JSON file with default settings")
    p.set_defaults(func=cmd_sweep_theta)

    p = sub.add_parser("sweep-damping", help="damping sweep of the d=3 pair bounds")
    p.add_argument("--steps", type=int)
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--config", help="JSON file with default settings")
    p.set_defaults(func=cmd_sweep_damping)

    p = sub.add_parser("verify", help="run a randomized property suite")
    p.add_argument("--suite", required=True, help=f"one of {sorted(SUITES)}")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
