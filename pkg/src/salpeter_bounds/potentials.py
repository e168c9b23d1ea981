"""Central confining potentials used by the radial eigensolver.

A potential carries its asymptotic growth class so the solver can make
a sane first guess for the box radius before the numeric search refines
it.  Evaluators are vectorised over numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

__all__ = [
    "CentralPotential",
    "linear_potential",
    "harmonic_potential",
    "relativistic_well",
    "relativistic_binding_well",
    "scaled_potential",
]

ArrayLike = Union[float, np.ndarray]

GROWTH_CLASSES = ("linear", "quadratic", "sqrt-quadratic")


@dataclass(frozen=True)
class CentralPotential:
    """A radial potential V(r) on r > 0 together with its growth class."""

    evaluate: Callable[[ArrayLike], ArrayLike]
    label: str
    asymptotic_growth: str

    def __post_init__(self):
        if self.asymptotic_growth not in GROWTH_CLASSES:
            raise ValueError(
                f"unknown growth class {self.asymptotic_growth!r}; "
                f"expected one of {GROWTH_CLASSES}"
            )

    def __call__(self, r: ArrayLike) -> ArrayLike:
        return self.evaluate(r)


def linear_potential(slope: float = 1.0) -> CentralPotential:
    """V(r) = slope * r."""
    if slope <= 0.0:
        raise ValueError("slope must be positive")
    return CentralPotential(
        evaluate=lambda r: slope * np.asarray(r, dtype=np.float64),
        label=f"{slope:g}*r" if slope != 1.0 else "r",
        asymptotic_growth="linear",
    )


def harmonic_potential(strength: float = 1.0) -> CentralPotential:
    """V(r) = strength * r^2."""
    if strength <= 0.0:
        raise ValueError("strength must be positive")
    return CentralPotential(
        evaluate=lambda r: strength * np.square(np.asarray(r, dtype=np.float64)),
        label=f"{strength:g}*r^2" if strength != 1.0 else "r^2",
        asymptotic_growth="quadratic",
    )


def relativistic_well(m: float) -> CentralPotential:
    """V(r) = sqrt(m^2 + r^2)."""
    if m < 0.0:
        raise ValueError("mass must be nonnegative")
    return CentralPotential(
        evaluate=lambda r: np.hypot(m, np.asarray(r, dtype=np.float64)),
        label=f"sqrt({m:g}^2+r^2)",
        asymptotic_growth="sqrt-quadratic",
    )


def relativistic_binding_well(m: float) -> CentralPotential:
    """V(r) = sqrt(m^2 + r^2) - m, evaluated without cancellation.

    Written as r^2 / (m + sqrt(m^2 + r^2)) so that for m >> r the small
    difference is formed directly instead of by subtracting two numbers
    of size m.  Spectra of this well are the binding energies e(m) - m.
    """
    if m < 0.0:
        raise ValueError("mass must be nonnegative")

    def evaluate(r: ArrayLike) -> ArrayLike:
        rr = np.asarray(r, dtype=np.float64)
        return np.square(rr) / (m + np.hypot(m, rr))

    return CentralPotential(
        evaluate=evaluate,
        label=f"sqrt({m:g}^2+r^2)-{m:g}",
        asymptotic_growth="sqrt-quadratic",
    )


def scaled_potential(
    base: CentralPotential, scale: float, label: str | None = None
) -> CentralPotential:
    """scale * V(r), preserving the growth class."""
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    return CentralPotential(
        evaluate=lambda r: scale * base.evaluate(r),
        label=label if label is not None else f"{scale:g}*({base.label})",
        asymptotic_growth=base.asymptotic_growth,
    )
