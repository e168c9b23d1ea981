"""Benchmark the compiled tridiagonal kernels against the pure fallback.

Runs the structured radial solve and the generic dense-coefficient solve
on identical inputs through both backends, reports wall times, speedup,
and the worst eigenvalue disagreement.  Use --sizes to stress larger
grids; the defaults finish in a few seconds on one core.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from salpeter_bounds.kernels import _tridiag_py as pure_impl

try:
    from salpeter_bounds.kernels import _tridiag as compiled_impl
except ImportError:  # build without the extension: time the fallback only
    compiled_impl = None


def _harmonic_stencil(n: int, box: float) -> tuple[np.ndarray, float]:
    h = box / (n + 1)
    r = h * np.arange(1, n + 1)
    return np.square(r), 1.0 / (h * h)


def _best_of(fn, repeats: int) -> tuple[float, float]:
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return value, best


def bench_radial(n: int, repeats: int) -> list[tuple[str, float, float]]:
    v, c = _harmonic_stencil(n, 12.0)
    rows = []
    for name, impl in (("pure", pure_impl), ("compiled", compiled_impl)):
        if impl is None:
            continue
        (lam, _, _), secs = _best_of(
            lambda impl=impl: impl.radial_lowest_eigenvalue(v, c), repeats
        )
        rows.append((name, lam, secs))
    return rows


def bench_generic(n: int, repeats: int) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng(7)
    diag = rng.uniform(0.5, 2.0, n)
    off = rng.uniform(-1.0, 1.0, n - 1)
    rows = []
    for name, impl in (("pure", pure_impl), ("compiled", compiled_impl)):
        if impl is None:
            continue
        (lam, _, _), secs = _best_of(
            lambda impl=impl: impl.lowest_eigenvalue(diag, off), repeats
        )
        rows.append((name, lam, secs))
    return rows


def _report(title: str, rows: list[tuple[str, float, float]]) -> None:
    print(title)
    for name, lam, secs in rows:
        print(f"  {name:9s} {secs * 1e3:10.2f} ms   lambda = {lam:.15g}")
    if len(rows) == 2:
        (_, lam_a, t_a), (_, lam_b, t_b) = rows
        print(f"  speedup   {t_a / t_b:10.1f} x    |diff| = {abs(lam_a - lam_b):.3e}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        type=lambda s: [int(x) for x in s.split(",")],
        default=[2000, 8000],
        help="comma-separated matrix sizes (default: 2000,8000)",
    )
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats, best kept")
    args = parser.parse_args()

    if compiled_impl is None:
        print("compiled extension not available; timing the pure backend only\n")
    for n in args.sizes:
        _report(f"radial stencil solve, n = {n}", bench_radial(n, args.repeats))
        _report(f"generic tridiagonal solve, n = {n}", bench_generic(n, args.repeats))


if __name__ == "__main__":
    main()
