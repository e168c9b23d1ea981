"""Theorem-level bound tests: exactness, ordering, scaling, limits."""

import math

import pytest

from salpeter_bounds import (
    ScaledOneBodySpec,
    SystemSpec,
    bound_formula,
    bounds_pair,
    e_of_m,
    lower_bound,
    mu_of,
    nonrel_energy,
    p_of_m,
    scaled_one_body_energy,
    two_body_exact,
    upper_bound,
)

# Frozen anchors (dual-route verified; the literature quotes e(0) to
# 9 digits, everything else follows by closed-form scaling).
LOWER_2_0_1 = 3.711514162978  # 4^(1/3) e(0)
UPPER_2_0_1 = 3.931112091313  # 3 (3/2)^(2/3)
LOWER_5_0_1 = 17.227322694676  # 400^(1/3) e(0)
LOWER_4_0_1 = 12.255149749397  # 144^(1/3) e(0)


def test_system_spec_validation():
    with pytest.raises(ValueError):
        SystemSpec(N=1, m=0.0, gamma=1.0)
    with pytest.raises(ValueError):
        SystemSpec(N=3, m=-0.5, gamma=1.0)
    with pytest.raises(ValueError):
        SystemSpec(N=3, m=0.5, gamma=0.0)


def test_mu_of():
    assert mu_of(SystemSpec(2, 1.0, 1.0)) == pytest.approx(2.0 ** (1.0 / 3.0))
    assert mu_of(SystemSpec(6, 0.0, 2.0)) == 0.0
    assert mu_of(SystemSpec(8, 2.0, 0.5)) == pytest.approx(
        2.0 * (16.0 / 49.0) ** (1.0 / 3.0)
    )


def test_massless_anchors():
    assert lower_bound(SystemSpec(2, 0.0, 1.0)) == pytest.approx(LOWER_2_0_1, abs=1e-8)
    assert upper_bound(SystemSpec(2, 0.0, 1.0)) == pytest.approx(UPPER_2_0_1, abs=1e-9)
    assert lower_bound(SystemSpec(5, 0.0, 1.0)) == pytest.approx(LOWER_5_0_1, abs=1e-7)
    assert lower_bound(SystemSpec(4, 0.0, 1.0)) == pytest.approx(LOWER_4_0_1, abs=1e-7)
    assert lower_bound(SystemSpec(4, 0.0, 1.0)) < upper_bound(SystemSpec(4, 0.0, 1.0))
    # Closed form for any massless upper bound: beta = N, and
    # min_t [N sqrt(a/t) + b t] = 3 (N^2 a b / 4)^(1/3).
    for n in (2, 3, 7):
        a = 2.0 * (n - 1) * 1.5 * 1.5 / n
        b = 0.5 * n * (n - 1)
        closed = 3.0 * (n * n * a * b / 4.0) ** (1.0 / 3.0)
        assert upper_bound(SystemSpec(n, 0.0, 1.0)) == pytest.approx(closed, rel=1e-10)


def test_two_body_exactness_grid():
    for m in (0.0, 1.0, 10.0):
        for gamma in (0.5, 1.0, 2.0):
            low = lower_bound(SystemSpec(2, m, gamma))
            exact = two_body_exact(m, gamma)
            assert abs(low - exact) <= 1e-10 * max(1.0, abs(exact))


def test_two_body_values():
    assert two_body_exact(0.0, 2.0) == pytest.approx(
        8.0 ** (1.0 / 3.0) * e_of_m(0.0), rel=1e-10
    )
    # Heavy-mass two-body asymptote: 2m + 3 sqrt(gamma/(2m)) sqrt(2).
    m, gamma = 500.0, 1.3
    asym = 2.0 * m + 3.0 * math.sqrt(gamma / (2.0 * m)) * math.sqrt(2.0)
    assert abs(two_body_exact(m, gamma) - asym) <= 1e-3


def test_formula_equivalence():
    for spec in (
        SystemSpec(2, 0.0, 1.0),
        SystemSpec(3, 1.0, 1.0),
        SystemSpec(5, 0.3, 2.0),
        SystemSpec(8, 10.0, 0.5),
    ):
        direct = lower_bound(spec)
        via_min = bound_formula(spec, p_of_m(mu_of(spec)))
        assert abs(direct - via_min) <= 1e-6 * max(1.0, abs(direct))


def test_scaling_routes_agree():
    for spec in (SystemSpec(3, 1.0, 1.0), SystemSpec(6, 2.0, 0.7)):
        n, m, gamma = spec.N, spec.m, spec.gamma
        scaled = scaled_one_body_energy(
            ScaledOneBodySpec(
                m=m, beta=float(n), gamma=0.5 * n * (n - 1) * gamma,
                lam=2.0 * (n - 1) / n,
            )
        )
        assert scaled == pytest.approx(lower_bound(spec), rel=1e-12)


def test_scaled_one_body_identity_and_two_body():
    for m in (0.0, 1.0, 3.0):
        ident = scaled_one_body_energy(ScaledOneBodySpec(m=m, beta=1.0, gamma=1.0, lam=1.0))
        assert ident == pytest.approx(e_of_m(m), rel=1e-12)
        two = scaled_one_body_energy(ScaledOneBodySpec(m=m, beta=2.0, gamma=1.5, lam=1.0))
        assert two == pytest.approx(two_body_exact(m, 1.5), rel=1e-12)


def test_sandwich_spot_checks():
    for spec in (
        SystemSpec(2, 0.0, 1.0),
        SystemSpec(4, 0.1, 0.5),
        SystemSpec(8, 100.0, 2.0),
    ):
        pair = bounds_pair(spec)
        assert pair.lower <= pair.upper + 1e-9 * max(1.0, pair.upper)
        assert pair.p_upper == 1.5
        assert pair.mu == pytest.approx(mu_of(spec))
        assert 1.3760 < pair.p_lower < 1.5


def test_bound_formula_monotone_in_p():
    for spec in (SystemSpec(3, 0.5, 1.0), SystemSpec(5, 0.0, 2.0)):
        values = [bound_formula(spec, p) for p in (1.0, 1.2, 1.376, 1.45, 1.5)]
        assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))


def test_upper_bound_near_nonrelativistic_at_heavy_mass():
    spec = SystemSpec(3, 1000.0, 1.0)
    enr = nonrel_energy(spec)
    assert abs(upper_bound(spec) - enr) <= 0.01 * (enr - 3000.0)


def test_two_body_coalescence():
    pair = bounds_pair(SystemSpec(2, 1000.0, 1.0))
    assert (pair.upper - pair.lower) / (pair.upper - 2000.0) < 0.01


def test_nonrel_energy_values():
    assert nonrel_energy(SystemSpec(2, 1.0, 1.0)) == pytest.approx(5.0)
    assert nonrel_energy(SystemSpec(3, 2.0, 1.0)) == pytest.approx(6.0 + 3.0 * math.sqrt(3.0))
    assert nonrel_energy(SystemSpec(8, 1.0, 1.0)) == pytest.approx(50.0)
    with pytest.raises(ValueError):
        nonrel_energy(SystemSpec(3, 0.0, 1.0))


def test_scaled_spec_validation():
    with pytest.raises(ValueError):
        ScaledOneBodySpec(m=1.0, beta=0.0, gamma=1.0, lam=1.0)
    with pytest.raises(ValueError):
        ScaledOneBodySpec(m=1.0, beta=1.0, gamma=-1.0, lam=1.0)
    with pytest.raises(ValueError):
        ScaledOneBodySpec(m=1.0, beta=1.0, gamma=1.0, lam=0.0)
