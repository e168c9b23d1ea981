"""Command-line interface: solves, bound tables, figure CSVs, verification.

Exit codes: 0 success, 1 usage error, 2 numerical or I/O failure.
All numbers print with 9 significant digits; CSV files are UTF-8 with
LF line endings.  Flags override values from an optional JSON config
file whose keys mirror the run-configuration fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Sequence

import numpy as np

from .bounds import (
    P_UPPER,
    SystemSpec,
    bound_formula,
    lower_bound,
    mu_of,
    upper_bound,
)
from .oracle import run_verification
from .pfunction import binding_energy_of_m, e_of_m, p_of_m
from .radial import DEFAULT_TOL, ConvergenceError

__all__ = ["main", "RunConfig"]

# Lower-curve constant for the fixed-P figure: a safe truncation just
# below inf P = P(0) = 1.37608354..., so the curve stays a true bound.
P_LOWER_CONST = 1.376079

_DEFAULT_GRID = "0:10:101:linear"
_DEFAULT_N_RANGE = "2:8"

USAGE_ERROR = 1
NUMERICAL_ERROR = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    mass_grid: tuple
    mass: float | None
    N: int
    N_range: tuple
    gamma: float
    tol: float
    output_path: str | None
    subtract_rest_mass: bool


class _UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _parse_mass_grid(spec) -> tuple:
    """Grid spec: 'start:stop:count:spacing' or an explicit list."""
    if isinstance(spec, (list, tuple)):
        grid = tuple(float(v) for v in spec)
        if not grid:
            raise _UsageError("mass grid must be non-empty")
        return grid
    text = str(spec)
    parts = text.split(":")
    if len(parts) == 4:
        start, stop, count, spacing = parts
        try:
            start, stop, count = float(start), float(stop), int(count)
        except ValueError as exc:
            raise _UsageError(f"bad mass grid {text!r}: {exc}") from exc
        if count < 1:
            raise _UsageError("mass grid needs at least one point")
        if spacing == "linear":
            return tuple(float(v) for v in np.linspace(start, stop, count))
        if spacing == "log":
            if start <= 0.0 or stop <= 0.0:
                raise _UsageError("log spacing needs positive endpoints")
            return tuple(float(v) for v in np.geomspace(start, stop, count))
        raise _UsageError(f"unknown spacing {spacing!r}; use linear or log")
    try:
        grid = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad mass grid {text!r}: {exc}") from exc
    if not grid:
        raise _UsageError("mass grid must be non-empty")
    return grid


def _parse_n_range(spec) -> tuple:
    if isinstance(spec, (list, tuple)):
        values = tuple(int(v) for v in spec)
    else:
        parts = str(spec).split(":")
        try:
            if len(parts) == 2:
                lo, hi = int(parts[0]), int(parts[1])
                values = tuple(range(lo, hi + 1))
            else:
                values = tuple(int(v) for v in str(spec).split(","))
        except ValueError as exc:
            raise _UsageError(f"bad N range {spec!r}: {exc}") from exc
    if not values or any(v < 2 for v in values):
        raise _UsageError("N range must be non-empty with every N >= 2")
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override it")
    common.add_argument("--tol", type=float, help="solver tolerance (default 1e-8)")
    common.add_argument("--output", "-o", dest="output_path", help="output file path")

    grid_args = argparse.ArgumentParser(add_help=False)
    grid_args.add_argument(
        "--mass-grid",
        help="mass grid start:stop:count:spacing (spacing linear|log) "
        "or comma-separated list",
    )
    grid_args.add_argument("--gamma", type=float, help="pair coupling (default 1)")
    grid_args.add_argument(
        "--n-range", help="boson counts lo:hi or comma list (default 2:8)"
    )
    grid_args.add_argument(
        "--subtract-rest-mass",
        action="store_true",
        default=None,
        help="report E - N*m instead of E",
    )

    parser = _Parser(
        prog="salpeter-bounds",
        description="Ground-state energy bounds for semirelativistic "
        "N-boson oscillators.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("one-body", parents=[common], help="print e(m) and P(m)")
    p.add_argument("--mass", type=float, help="one-body mass m >= 0")

    p = sub.add_parser(
        "pfunction", parents=[common, grid_args], help="tabulate e and P on a grid"
    )

    p = sub.add_parser("bounds", parents=[common, grid_args], help="print bound pair")
    p.add_argument("--mass", type=float, help="boson mass m >= 0")
    p.add_argument("--N", type=int, dest="N", help="boson count N >= 2")

    for k in (1, 2, 3):
        sub.add_parser(
            f"figure{k}",
            parents=[common, grid_args],
            help=f"emit the figure-{k} CSV",
        )

    sub.add_parser("verify", parents=[common], help="run the oracle suite")
    return parser


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"config {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise _UsageError("config must be a JSON object")
    return data


def _resolve(args: argparse.Namespace) -> RunConfig:
    file_cfg = _load_config(getattr(args, "config", None))

    def pick(flag_name: str, cfg_name: str, fallback):
        flag = getattr(args, flag_name, None)
        if flag is not None:
            return flag
        if cfg_name in file_cfg:
            return file_cfg[cfg_name]
        return fallback

    command = args.command or file_cfg.get("command")
    if command is None:
        raise _UsageError("no command given (and none in the config file)")

    tol = float(pick("tol", "tol", DEFAULT_TOL))
    if tol < 1e-12:
        raise _UsageError("tol must be at least 1e-12")

    mass = pick("mass", "mass", None)
    gamma = float(pick("gamma", "gamma", 1.0))
    if gamma <= 0.0:
        raise _UsageError("gamma must be positive")
    N = pick("N", "N", 2)
    if int(N) != N or N < 2:
        raise _UsageError("N must be an integer >= 2")

    return RunConfig(
        command=command,
        mass_grid=_parse_mass_grid(pick("mass_grid", "mass_grid", _DEFAULT_GRID)),
        mass=None if mass is None else float(mass),
        N=int(N),
        N_range=_parse_n_range(pick("n_range", "N_range", _DEFAULT_N_RANGE)),
        gamma=gamma,
        tol=tol,
        output_path=pick("output_path", "output_path", None),
        subtract_rest_mass=bool(
            pick("subtract_rest_mass", "subtract_rest_mass", False)
        ),
    )


def _sweep(masses: Sequence[float], worker: Callable[[float], list]) -> List[list]:
    """Evaluate worker over the grid in parallel, assembled in grid order."""
    with ThreadPoolExecutor(max_workers=4) as pool:
        futures = [pool.submit(worker, m) for m in masses]
        rows: List[list] = []
        for future in futures:
            rows.extend(future.result())
    return rows


def _write_csv(path: str | None, header: str, rows: List[list], default: str) -> str:
    target = path or default
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    payload = "\n".join(lines) + "\n"
    with open(target, "w", encoding="utf-8", newline="") as fh:
        fh.write(payload)
    return target


def _require_mass(cfg: RunConfig) -> float:
    if cfg.mass is None:
        raise _UsageError("this command needs --mass")
    if cfg.mass < 0.0:
        raise _UsageError("mass must be nonnegative")
    return cfg.mass


def _cmd_one_body(cfg: RunConfig) -> int:
    m = _require_mass(cfg)
    print(f"e({_fmt(m)}) = {_fmt(e_of_m(m, cfg.tol))}")
    print(f"P({_fmt(m)}) = {_fmt(p_of_m(m, cfg.tol))}")
    return 0


def _cmd_pfunction(cfg: RunConfig) -> int:
    def worker(m: float) -> list:
        binding = binding_energy_of_m(m, cfg.tol)
        return [[m, m + binding, binding, p_of_m(m, cfg.tol)]]

    rows = _sweep(cfg.mass_grid, worker)
    target = _write_csv(cfg.output_path, "m,e,e_minus_m,P", rows, "pfunction.csv")
    print(f"wrote {len(rows)} rows to {target}")
    return 0


def _cmd_bounds(cfg: RunConfig) -> int:
    m = _require_mass(cfg)
    sys_spec = SystemSpec(N=cfg.N, m=m, gamma=cfg.gamma)
    mu = mu_of(sys_spec)
    shift = sys_spec.N * m if cfg.subtract_rest_mass else 0.0
    print(f"lower = {_fmt(lower_bound(sys_spec, cfg.tol) - shift)}")
    print(f"upper = {_fmt(upper_bound(sys_spec) - shift)}")
    print(f"mu = {_fmt(mu)}")
    print(f"P(mu) = {_fmt(p_of_m(mu, cfg.tol))}")
    print(f"P_upper = {_fmt(P_UPPER)}")
    return 0


def _figure_rows(cfg: RunConfig, running_p: bool) -> List[list]:
    def worker(m: float) -> list:
        out = []
        for N in cfg.N_range:
            sys_spec = SystemSpec(N=N, m=m, gamma=cfg.gamma)
            if running_p:
                low = lower_bound(sys_spec, cfg.tol)
            else:
                low = bound_formula(sys_spec, P_LOWER_CONST)
            up = upper_bound(sys_spec)
            shift = N * m if cfg.subtract_rest_mass else 0.0
            out.append([m, N, low - shift, up - shift])
        return out

    return _sweep(cfg.mass_grid, worker)


def _cmd_figure1(cfg: RunConfig) -> int:
    def worker(m: float) -> list:
        return [[m, binding_energy_of_m(m, cfg.tol), p_of_m(m, cfg.tol)]]

    rows = _sweep(cfg.mass_grid, worker)
    target = _write_csv(cfg.output_path, "m,e_minus_m,P", rows, "figure1.csv")
    print(f"wrote {len(rows)} rows to {target}")
    return 0


def _cmd_figure2(cfg: RunConfig) -> int:
    rows = _figure_rows(cfg, running_p=False)
    target = _write_csv(
        cfg.output_path, "m,N,E_lower_const,E_upper", rows, "figure2.csv"
    )
    print(f"wrote {len(rows)} rows to {target}")
    return 0


def _cmd_figure3(cfg: RunConfig) -> int:
    rows = _figure_rows(cfg, running_p=True)
    target = _write_csv(
        cfg.output_path, "m,N,E_lower_running,E_upper", rows, "figure3.csv"
    )
    print(f"wrote {len(rows)} rows to {target}")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    checks = run_verification(cfg.tol)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = (
            f"{status} {c.name}: observed {c.observed:.3e} "
            f"(threshold {c.threshold:.3e})"
        )
        if c.detail:
            line += f" [{c.detail}]"
        print(line)
    failed = sum(1 for c in checks if not c.passed)
    if failed:
        print(f"{failed} of {len(checks)} checks failed", file=sys.stderr)
        return NUMERICAL_ERROR
    print(f"all {len(checks)} checks passed")
    return 0


_COMMANDS = {
    "one-body": _cmd_one_body,
    "pfunction": _cmd_pfunction,
    "bounds": _cmd_bounds,
    "figure1": _cmd_figure1,
    "figure2": _cmd_figure2,
    "figure3": _cmd_figure3,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve(args)
        if cfg.command not in _COMMANDS:
            raise _UsageError(f"unknown command {cfg.command!r}")
    except _UsageError as exc:
        print(f"salpeter-bounds: error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    try:
        return _COMMANDS[cfg.command](cfg)
    except _UsageError as exc:
        print(f"salpeter-bounds: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ConvergenceError, ArithmeticError, ValueError) as exc:
        print(f"salpeter-bounds: numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except OSError as exc:
        print(f"salpeter-bounds: i/o failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
