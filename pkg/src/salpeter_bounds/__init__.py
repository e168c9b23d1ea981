"""Certified energy bounds for semirelativistic N-boson oscillators.

The package computes upper and lower bounds on the ground-state energy
of N identical bosons with square-root kinetic energies and pairwise
harmonic attraction, built from a one-body radial eigensolver, the
dimensionless representation function P(m), and closed-form envelope
minimisations, with an independent oscillator-basis oracle.
"""

from .bounds import (
    EnergyBounds,
    ScaledOneBodySpec,
    SystemSpec,
    bound_formula,
    bounds_pair,
    lower_bound,
    mu_of,
    nonrel_energy,
    scaled_one_body_energy,
    two_body_exact,
    upper_bound,
)
from .pfunction import e_nr, e_of_m, e_via_min, kinetic_parametrization, p_of_m
from .potentials import (
    CentralPotential,
    harmonic_potential,
    linear_potential,
    relativistic_binding_well,
    relativistic_well,
)
from .radial import (
    ConvergenceError,
    EigenResult,
    GridConfig,
    auto_solve,
    choose_box_radius,
    solve_ground_state,
)

__version__ = "0.1.0"

__all__ = [
    "CentralPotential",
    "ConvergenceError",
    "EigenResult",
    "EnergyBounds",
    "GridConfig",
    "ScaledOneBodySpec",
    "SystemSpec",
    "auto_solve",
    "bound_formula",
    "bounds_pair",
    "choose_box_radius",
    "e_nr",
    "e_of_m",
    "e_via_min",
    "harmonic_potential",
    "kinetic_parametrization",
    "linear_potential",
    "lower_bound",
    "mu_of",
    "nonrel_energy",
    "p_of_m",
    "relativistic_binding_well",
    "relativistic_well",
    "scaled_one_body_energy",
    "solve_ground_state",
    "two_body_exact",
    "upper_bound",
]
