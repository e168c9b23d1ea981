"""Oracle tests: basis solver, spectral identity, Gaussian expectations."""

import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, gammaln

from salpeter_bounds import SystemSpec, e_of_m, lower_bound, two_body_exact, upper_bound
from salpeter_bounds.oracle import (
    BasisConfig,
    GaussianTrial,
    gaussian_upper_expectation,
    lemma1_residual,
    minimize_gaussian_expectation,
    oscillator_r2_matrix,
    reduced_operator_energy,
    run_verification,
    salpeter_basis_energy,
)

E0_AIRY = 2.33810741


def _reference_basis(size, scale, r):
    """Normalized l=0 oscillator radial functions via scipy Laguerre."""
    x = (r / scale) ** 2
    cols = []
    for n in range(size):
        norm = math.exp(0.5 * (gammaln(n + 1) - gammaln(n + 1.5)))
        u = (
            math.sqrt(2.0 / scale)
            * norm
            * (r / scale)
            * eval_genlaguerre(n, 0.5, x)
            * np.exp(-0.5 * x)
        )
        cols.append(u)
    return np.stack(cols, axis=1)


def test_r2_matrix_against_quadrature():
    size, scale = 6, 0.8
    r = np.linspace(1e-6, 12.0, 120001)
    basis = _reference_basis(size, scale, r)
    gram = np.trapezoid(basis[:, :, None] * basis[:, None, :], r, axis=0)
    assert np.max(np.abs(gram - np.eye(size))) <= 1e-7

    weighted = basis * (r * r)[:, None]
    direct = np.trapezoid(basis[:, :, None] * weighted[:, None, :], r, axis=0)
    closed = oscillator_r2_matrix(size, scale)
    assert np.max(np.abs(direct - closed)) <= 1e-6


def test_r2_matrix_structure():
    mat = oscillator_r2_matrix(5, 1.3)
    assert np.allclose(mat, mat.T)
    # Tridiagonal: nothing beyond the first off-diagonal.
    assert np.max(np.abs(np.triu(mat, 2))) == 0.0
    assert np.all(np.diag(mat) > 0.0)


def test_basis_energy_anchors():
    res = salpeter_basis_energy(0.0)
    assert res.converged
    assert abs(res.energy - E0_AIRY) <= 1e-5

    res = salpeter_basis_energy(1.0)
    assert abs(res.energy - e_of_m(1.0)) <= 1e-6 * max(1.0, e_of_m(1.0))

    res = salpeter_basis_energy(1000.0)
    asym = 1000.0 + 3.0 / math.sqrt(2000.0)
    assert abs(res.energy - asym) <= 1e-3


def test_basis_energy_variational_from_above():
    # Rayleigh-Ritz in a truncated basis can only overshoot.
    for m in (0.0, 1.0):
        res = salpeter_basis_energy(m, BasisConfig(size=12))
        assert res.energy >= e_of_m(m) - 1e-9


def test_basis_config_validation():
    with pytest.raises(ValueError):
        BasisConfig(size=2)
    with pytest.raises(ValueError):
        BasisConfig(size=40, quadrature_points=16)
    with pytest.raises(ValueError):
        BasisConfig(size=40, scale=-1.0)


def test_lemma1_residual_floor():
    assert lemma1_residual(256, 1.0) < 1e-10
    assert lemma1_residual(128, 1.0) < 1e-8
    two_bump = lambda x: np.exp(-0.5 * x**2) + 0.5 * np.exp(-0.5 * (x - 1.5) ** 2)
    assert lemma1_residual(256, 1.0, profile=two_bump) < 1e-10


def test_lemma1_rejects_bad_grids():
    with pytest.raises(ValueError):
        lemma1_residual(100, 1.0)  # not a power of two
    with pytest.raises(ValueError):
        lemma1_residual(32, 1.0)  # too coarse
    # The box scales with the trial width, so a Gaussian never aliases;
    # a cusp has a p^-4 power tail and must trip the spectral gate.
    with pytest.raises(ValueError):
        lemma1_residual(64, 1.0, profile=lambda x: np.exp(-np.abs(x)))


def test_gaussian_expectation_closed_form():
    # N=2, m=0, gamma=1, alpha=1: 2 sqrt(3/2) + 3/2.
    value = gaussian_upper_expectation(SystemSpec(2, 0.0, 1.0), GaussianTrial(1.0))
    assert value == pytest.approx(2.0 * math.sqrt(1.5) + 1.5, rel=1e-12)


def test_gaussian_minimum_equals_upper_bound():
    for spec in (
        SystemSpec(2, 0.0, 1.0),
        SystemSpec(3, 1.0, 1.0),
        SystemSpec(6, 0.2, 2.0),
    ):
        value, trial = minimize_gaussian_expectation(spec)
        up = upper_bound(spec)
        assert abs(value - up) <= 1e-10 * max(1.0, abs(up))
        assert trial.alpha > 0.0
        # Any other trial must lie above the minimum.
        assert gaussian_upper_expectation(spec, GaussianTrial(2.0 * trial.alpha)) >= value


def test_jensen_direction():
    spec = SystemSpec(3, 1.0, 1.0)
    reduced = reduced_operator_energy(spec)
    for alpha in (0.3, 0.9, 2.7):
        assert gaussian_upper_expectation(spec, GaussianTrial(alpha)) >= reduced - 1e-9


def test_gaussian_trial_validation():
    with pytest.raises(ValueError):
        GaussianTrial(0.0)


def test_reduced_operator_matches_lower_bound():
    for spec in (
        SystemSpec(2, 1.0, 1.0),
        SystemSpec(3, 0.0, 1.0),
        SystemSpec(5, 1.0, 1.0),
    ):
        red = reduced_operator_energy(spec)
        low = lower_bound(spec)
        assert abs(red - low) <= 1e-6 * max(1.0, abs(low))


def test_reduced_operator_two_body():
    red = reduced_operator_energy(SystemSpec(2, 0.5, 1.5))
    assert red == pytest.approx(two_body_exact(0.5, 1.5), rel=1e-8)


def test_reduced_operator_massless_closed_form():
    # N=3, m=0: (9*4)^(1/3) e(0).
    red = reduced_operator_energy(SystemSpec(3, 0.0, 1.0))
    assert red == pytest.approx(36.0 ** (1.0 / 3.0) * e_of_m(0.0), rel=1e-8)


def test_run_verification_all_pass():
    checks = run_verification()
    assert checks
    failed = [c.name for c in checks if not c.passed]
    assert not failed, failed
