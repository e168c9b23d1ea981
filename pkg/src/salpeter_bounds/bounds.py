"""Ground-state energy bounds for the N-boson semirelativistic oscillator.

The N-body Hamiltonian sum_i sqrt(m^2 + p_i^2) + gamma sum_{i<j} |r_i -
r_j|^2 admits two-sided bounds through a single envelope formula

    E(P) = min over r>0 of [N sqrt(m^2 + 2(N-1)P^2/(N r^2))
                            + (N/2)(N-1) gamma r^2],

evaluated at P = 3/2 for the upper bound and at the running value
P = P(mu), mu = m (N/(gamma (N-1)^2))^(1/3), for the lower bound.  The
lower bound collapses to the closed scaling form
(N^2 (N-1)^2 gamma)^(1/3) e(mu), exact at N=2, and both bounds coalesce
onto the nonrelativistic energy as m grows.

All energies include the rest mass N m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .minimize import minimize_kinetic_envelope
from .pfunction import e_of_m, p_of_m
from .radial import DEFAULT_TOL

__all__ = [
    "SystemSpec",
    "ScaledOneBodySpec",
    "EnergyBounds",
    "P_UPPER",
    "bound_formula",
    "mu_of",
    "lower_bound",
    "upper_bound",
    "two_body_exact",
    "scaled_one_body_energy",
    "nonrel_energy",
    "bounds_pair",
]

P_UPPER = 1.5

_SANDWICH_SLACK = 1e-9


@dataclass(frozen=True)
class SystemSpec:
    """N identical bosons of mass m with pair coupling gamma."""

    N: int
    m: float
    gamma: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError("need an integer boson count N >= 2")
        if not self.m >= 0.0:
            raise ValueError("mass must be nonnegative")
        if not self.gamma > 0.0:
            raise ValueError("coupling gamma must be positive")


@dataclass(frozen=True)
class ScaledOneBodySpec:
    """One-body problem beta sqrt(m^2 + lam p^2) + gamma lam r^2."""

    m: float
    beta: float
    gamma: float
    lam: float

    def __post_init__(self):
        if not (self.beta > 0.0 and self.gamma > 0.0 and self.lam > 0.0):
            raise ValueError("beta, gamma, lam must be positive")
        if not self.m >= 0.0:
            raise ValueError("mass must be nonnegative")


@dataclass(frozen=True)
class EnergyBounds:
    """Two-sided bounds with the P values and mass argument that made them."""

    lower: float
    upper: float
    p_lower: float
    p_upper: float
    mu: float


def bound_formula(sys: SystemSpec, P: float) -> float:
    """The envelope bound at a given P; increasing in P."""
    if not P > 0.0:
        raise ValueError("P must be positive")
    a = 2.0 * (sys.N - 1) * P * P / sys.N
    b = 0.5 * sys.N * (sys.N - 1) * sys.gamma
    value, _ = minimize_kinetic_envelope(sys.m, a=a, b=b, beta=float(sys.N))
    return value


def mu_of(sys: SystemSpec) -> float:
    """Mass argument of the running P: m (N/(gamma (N-1)^2))^(1/3)."""
    return sys.m * (sys.N / (sys.gamma * (sys.N - 1) ** 2)) ** (1.0 / 3.0)


def lower_bound(sys: SystemSpec, tol: float = DEFAULT_TOL) -> float:
    """(N^2 (N-1)^2 gamma)^(1/3) e(mu); certified lower bound, exact at N=2."""
    scale = (sys.N**2 * (sys.N - 1) ** 2 * sys.gamma) ** (1.0 / 3.0)
    return scale * e_of_m(mu_of(sys), tol)


def upper_bound(sys: SystemSpec) -> float:
    """Envelope bound at the limiting value P = 3/2."""
    return bound_formula(sys, P_UPPER)


def two_body_exact(m: float, gamma: float, tol: float = DEFAULT_TOL) -> float:
    """Exact two-body energy (4 gamma)^(1/3) e(m (2/gamma)^(1/3))."""
    if not gamma > 0.0:
        raise ValueError("coupling gamma must be positive")
    return (4.0 * gamma) ** (1.0 / 3.0) * e_of_m(m * (2.0 / gamma) ** (1.0 / 3.0), tol)


def scaled_one_body_energy(spec: ScaledOneBodySpec, tol: float = DEFAULT_TOL) -> float:
    """(beta^2 gamma lam)^(1/3) e(m (beta/(gamma lam))^(1/3)).

    Scaling identity for the ground energy of
    beta sqrt(m^2 + lam p^2) + gamma lam r^2.
    """
    scale = (spec.beta**2 * spec.gamma * spec.lam) ** (1.0 / 3.0)
    arg = spec.m * (spec.beta / (spec.gamma * spec.lam)) ** (1.0 / 3.0)
    return scale * e_of_m(arg, tol)


def nonrel_energy(sys: SystemSpec) -> float:
    """Schrödinger-limit energy N m + 3 sqrt(gamma/(2m)) sqrt(N) (N-1)."""
    if not sys.m > 0.0:
        raise ValueError("the nonrelativistic formula needs m > 0")
    return sys.N * sys.m + 3.0 * math.sqrt(sys.gamma / (2.0 * sys.m)) * math.sqrt(
        sys.N
    ) * (sys.N - 1)


def bounds_pair(sys: SystemSpec, tol: float = DEFAULT_TOL) -> EnergyBounds:
    """Lower and upper bounds together, with the sandwich enforced."""
    mu = mu_of(sys)
    p_lo = p_of_m(mu, tol)
    lower = lower_bound(sys, tol)
    upper = upper_bound(sys)
    if lower > upper + _SANDWICH_SLACK * max(1.0, abs(upper)):
        raise ArithmeticError(
            f"bound ordering violated for N={sys.N}, m={sys.m:g}, "
            f"gamma={sys.gamma:g}: lower={lower!r} > upper={upper!r}"
        )
    return EnergyBounds(lower=lower, upper=upper, p_lower=p_lo, p_upper=P_UPPER, mu=mu)
