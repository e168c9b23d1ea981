"""The one-body energy e(m) and its representation function P(m).

e(m) is the lowest eigenvalue of -Delta + sqrt(m^2 + r^2).  Internally
the solver works on the shifted well sqrt(m^2 + r^2) - m, whose ground
value is the binding energy e(m) - m; this keeps full relative accuracy
at large mass, where e(m) - m ~ 3/sqrt(2m) is tiny against m.

P(m) is the dimensionless function that makes the two-term envelope
min over r of [sqrt(m^2 + (P/r)^2) + r^2] reproduce e(m) exactly.  It
is evaluated in a cancellation-free form and lies in (1.376, 3/2),
increasing towards 3/2 as m grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .minimize import minimize_kinetic_envelope
from .potentials import relativistic_binding_well
from .radial import DEFAULT_TOL, ConvergenceError, auto_solve

__all__ = [
    "KineticParametrization",
    "binding_energy_of_m",
    "e_of_m",
    "p_of_m",
    "e_via_min",
    "kinetic_parametrization",
    "e_nr",
    "P_LOWER_EDGE",
    "P_UPPER_EDGE",
]

# Range of P(m): the infimum P(0) = 1.37608... is approached at m=0 and
# the supremum 3/2 in the nonrelativistic limit.  Used as sanity rails.
P_LOWER_EDGE = 1.375
P_UPPER_EDGE = 1.5


@dataclass(frozen=True)
class KineticParametrization:
    """Mean kinetic energy s and effective kinetic potential at radius r."""

    r: float
    s: float
    h_eff: float


def _check_mass(m: float) -> float:
    m = float(m)
    if not math.isfinite(m) or m < 0.0:
        raise ValueError("mass must be finite and nonnegative")
    return m


@lru_cache(maxsize=None)
def _binding_energy(m_key: float, tol: float) -> float:
    result = auto_solve(relativistic_binding_well(m_key), target_tol=tol)
    if not result.converged:
        raise ConvergenceError(
            f"one-body solve at m={m_key:g} stalled at error estimate "
            f"{result.error_estimate:.3e} (target {tol:g})"
        )
    return result.energy


def binding_energy_of_m(m: float, tol: float = DEFAULT_TOL) -> float:
    """e(m) - m, computed directly so large masses lose no digits."""
    return _binding_energy(round(_check_mass(m), 12), float(tol))


def e_of_m(m: float, tol: float = DEFAULT_TOL) -> float:
    """Lowest eigenvalue of -Delta + sqrt(m^2 + r^2); memoized by (m, tol)."""
    m = _check_mass(m)
    return m + binding_energy_of_m(m, tol)


def p_of_m(m: float, tol: float = DEFAULT_TOL) -> float:
    """The representation function P(m) in (1.376, 1.5).

    Algebraically P = sqrt(2 (e + s) / 27) * (2 e - s) with
    s = sqrt(e^2 + 3 m^2).  The factor 2e - s suffers catastrophic
    cancellation for m >> 1 (both terms grow like m while the
    difference shrinks), so it is evaluated through the identity
    2e - s = 3 (e - m)(e + m) / (2e + s), which uses the directly
    computed binding energy e - m.
    """
    m = _check_mass(m)
    binding = binding_energy_of_m(m, tol)
    e = m + binding
    s = math.hypot(e, math.sqrt(3.0) * m)
    second = 3.0 * binding * (e + m) / (2.0 * e + s)
    value = math.sqrt(2.0 * (e + s) / 27.0) * second
    if not P_LOWER_EDGE < value < P_UPPER_EDGE + 1e-9:
        raise ArithmeticError(
            f"P({m:g}) = {value!r} escaped its proven range; solver defect"
        )
    return value


def e_via_min(m: float, P: float) -> float:
    """min over r>0 of sqrt(m^2 + (P/r)^2) + r^2, the defining envelope.

    With P = p_of_m(m) this reproduces e_of_m(m); with other P values it
    gives the corresponding envelope energy (monotone increasing in P).
    """
    m = _check_mass(m)
    if not P > 0.0:
        raise ValueError("P must be positive")
    value, _ = minimize_kinetic_envelope(m, a=P * P, b=1.0, beta=1.0)
    return value


def kinetic_parametrization(
    m: float, r: float, tol: float = DEFAULT_TOL
) -> KineticParametrization:
    """Point (s, h_eff) = (sqrt(m^2 + (P(m)/r)^2), r^2) on the envelope."""
    m = _check_mass(m)
    if not r > 0.0:
        raise ValueError("radius must be positive")
    P = p_of_m(m, tol)
    return KineticParametrization(r=r, s=math.hypot(m, P / r), h_eff=r * r)


def e_nr(m: float) -> float:
    """Nonrelativistic limit m + 3/sqrt(2m); diverges at m=0."""
    m = float(m)
    if not m > 0.0:
        raise ValueError("the nonrelativistic formula needs m > 0")
    return m + 3.0 / math.sqrt(2.0 * m)
