"""One-dimensional minimisation helpers for the variational radii.

Every envelope minimised here has the shape
``f(t) = beta * sqrt(m^2 + a / t) + b * t`` with a, b > 0, which is
strictly unimodal in t on (0, inf).  Minimising over u = ln t keeps the
golden-section tolerance meaningful across many decades of scale.
"""

from __future__ import annotations

import math
from typing import Callable, Tuple

__all__ = [
    "golden_section_min",
    "minimize_on_log_axis",
    "minimize_kinetic_envelope",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_min(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 1e-12,
    max_iter: int = 400,
) -> Tuple[float, float]:
    """Minimise a unimodal f on [lo, hi]; returns (argmin, min).

    The returned value is the smallest f actually evaluated, so it is a
    valid upper bound for the true minimum even at coarse tolerance.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    a, b = lo, hi
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    best_x, best_f = (c, fc) if fc <= fd else (d, fd)
    for _ in range(max_iter):
        if h <= abs_tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
            if fc < best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
            if fd < best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def minimize_on_log_axis(
    f: Callable[[float], float],
    t_lo: float = 1e-8,
    t_hi: float = 1e8,
    log_tol: float = 1e-12,
) -> Tuple[float, float]:
    """Minimise f(t) over t > 0 by golden section on u = ln t.

    If the minimiser lands near a bracket edge the bracket is widened
    and the search repeated, so callers need not guess scales.
    """
    lo, hi = t_lo, t_hi
    for _ in range(6):
        u, fu = golden_section_min(
            lambda v: f(math.exp(v)), math.log(lo), math.log(hi), abs_tol=log_tol
        )
        edge = 1e-3 * (math.log(hi) - math.log(lo))
        if u - math.log(lo) < edge:
            lo *= 1e-6
            continue
        if math.log(hi) - u < edge:
            hi *= 1e6
            continue
        return math.exp(u), fu
    raise ValueError("minimiser did not settle inside the search bracket")


def minimize_kinetic_envelope(
    m: float, a: float, b: float, beta: float = 1.0
) -> Tuple[float, float]:
    """Minimise beta * sqrt(m^2 + a / t) + b * t; returns (min, t_star).

    t plays the role of a squared radius.  For m = 0 the minimum has the
    closed form 3 * (beta^2 * a * b / 4)^(1/3) at
    t = (beta * sqrt(a) / (2 b))^(2/3); the numeric path is still taken
    so that one code path serves all masses, and the closed form guards
    it in the tests.
    """
    if a <= 0.0 or b <= 0.0 or beta <= 0.0:
        raise ValueError("need a, b, beta > 0")
    if m < 0.0:
        raise ValueError("mass must be nonnegative")

    def objective(t: float) -> float:
        return beta * math.sqrt(m * m + a / t) + b * t

    t_star, value = minimize_on_log_axis(objective)
    return value, t_star
