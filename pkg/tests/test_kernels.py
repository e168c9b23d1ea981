"""Kernel tests: certified brackets, counts, and both backends.

The compiled and pure backends must satisfy the same contract, so every
test here is parametrized over whichever implementations are importable.
scipy's LAPACK tridiagonal solver is the external oracle at moderate
matrix norms (its absolute error grows as eps * ||T||, so comparisons
stay in the regime where that floor is far below the tolerance).
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import eigh_tridiagonal

from salpeter_bounds.kernels import _tridiag_py

IMPLS = [pytest.param(_tridiag_py, id="pure")]
try:
    from salpeter_bounds.kernels import _tridiag

    IMPLS.append(pytest.param(_tridiag, id="compiled"))
except ImportError:
    pass

# Discrete harmonic-well eigenvalue at R=6, n=8000, frozen from a
# 40-digit Sturm bisection; pins the structured kernel's absolute
# accuracy far below the generic eps * ||T|| floor.
HARMONIC_N8000_R6 = 2.9999998242189553


def _harmonic_grid(n, R=6.0):
    h = R / n
    r = h * np.arange(1, n)
    return r * r, 1.0 / (h * h)


@pytest.fixture(params=IMPLS)
def impl(request):
    return request.param


def test_lowest_eigenvalue_matches_lapack(impl):
    rng = np.random.default_rng(7)
    for n in (1, 2, 3, 10, 57, 400):
        d = rng.uniform(-5.0, 5.0, n)
        e = rng.uniform(-3.0, 3.0, max(n - 1, 0))
        lam, lo, hi = impl.lowest_eigenvalue(d, e)
        if n == 1:
            assert lam == d[0]
            continue
        ref = eigh_tridiagonal(d, e, select="i", select_range=(0, 0),
                               eigvals_only=True)[0]
        assert lo <= lam <= hi
        assert abs(lam - ref) <= 1e-11 * max(1.0, abs(ref))


def test_bracket_certifies_exactly_one_eigenvalue(impl):
    rng = np.random.default_rng(11)
    d = rng.uniform(-2.0, 2.0, 60)
    e = rng.uniform(-1.0, 1.0, 59)
    _, lo, hi = impl.lowest_eigenvalue(d, e)
    assert impl.eigenvalue_count_below(d, e, lo) == 0
    assert impl.eigenvalue_count_below(d, e, hi) == 1


def test_eigenvalue_count_matches_dense(impl):
    rng = np.random.default_rng(3)
    d = rng.uniform(-4.0, 4.0, 40)
    e = rng.uniform(-2.0, 2.0, 39)
    spectrum = eigh_tridiagonal(d, e, eigvals_only=True)
    for x in (-6.0, -1.0, 0.0, 1.5, 3.0, 8.0):
        assert impl.eigenvalue_count_below(d, e, x) == int(np.sum(spectrum < x))


def test_bracket_hint_accepted_and_verified(impl):
    d, e = np.array([2.0, 3.0, 4.0, 5.0]), np.array([-1.0, -0.5, -0.25])
    lam, lo, hi = impl.lowest_eigenvalue(d, e)
    # A correct hint narrows the search; a junk hint must be discarded,
    # not trusted.
    lam2, _, _ = impl.lowest_eigenvalue(d, e, bracket=(lam - 1e-6, lam + 1e-6))
    lam3, _, _ = impl.lowest_eigenvalue(d, e, bracket=(lam + 0.5, lam + 0.7))
    assert abs(lam2 - lam) <= 1e-12
    assert abs(lam3 - lam) <= 1e-12


def test_radial_kernel_matches_generic_at_small_n(impl):
    v, c = _harmonic_grid(500)
    lam_r, lo, hi = impl.radial_lowest_eigenvalue(v, c)
    d = 2.0 * c + v
    e = np.full(v.size - 1, -c)
    lam_g, _, _ = impl.lowest_eigenvalue(d, e)
    assert lo <= lam_r <= hi or abs(lam_r - lo) < 1e-9
    assert abs(lam_r - lam_g) <= 1e-9


def test_radial_kernel_high_precision_anchor(impl):
    v, c = _harmonic_grid(8000)
    lam, _, _ = impl.radial_lowest_eigenvalue(v, c)
    assert abs(lam - HARMONIC_N8000_R6) <= 1e-12


def test_radial_bracket_hint(impl):
    v, c = _harmonic_grid(2000)
    lam, _, _ = impl.radial_lowest_eigenvalue(v, c)
    lam2, _, _ = impl.radial_lowest_eigenvalue(v, c, bracket=(lam - 1e-7, lam + 1e-7))
    lam3, _, _ = impl.radial_lowest_eigenvalue(v, c, bracket=(lam + 1.0, lam + 2.0))
    assert abs(lam2 - lam) <= 1e-11
    assert abs(lam3 - lam) <= 1e-11


def test_input_validation(impl):
    with pytest.raises(ValueError):
        impl.lowest_eigenvalue(np.array([]), np.array([]))
    with pytest.raises(ValueError):
        impl.lowest_eigenvalue(np.array([1.0, 2.0]), np.array([]))
    with pytest.raises(ValueError):
        impl.lowest_eigenvalue(np.array([1.0, np.nan]), np.array([0.5]))
    with pytest.raises(ValueError):
        impl.radial_lowest_eigenvalue(np.array([]), 1.0)
    with pytest.raises(ValueError):
        impl.radial_lowest_eigenvalue(np.array([1.0, 2.0]), 0.0)
    with pytest.raises(ValueError):
        impl.radial_lowest_eigenvalue(np.array([1.0, np.inf]), 1.0)


def test_single_entry_matrices(impl):
    lam, lo, hi = impl.lowest_eigenvalue(np.array([4.5]), np.array([]))
    assert lam == lo == hi == 4.5
    lam, lo, hi = impl.radial_lowest_eigenvalue(np.array([1.5]), 2.0)
    assert lam == 1.5 + 4.0


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.floats(-8.0, 8.0), min_size=2, max_size=24),
    st.data(),
)
def test_lowest_eigenvalue_property(diag_list, data):
    d = np.array(diag_list)
    e = np.array(
        data.draw(
            st.lists(
                st.floats(-4.0, 4.0), min_size=d.size - 1, max_size=d.size - 1
            )
        )
    )
    ref = eigh_tridiagonal(d, e, eigvals_only=True)[0]
    for item in IMPLS:
        impl = item.values[0]
        lam, lo, hi = impl.lowest_eigenvalue(d, e)
        assert lo <= lam <= hi
        assert abs(lam - ref) <= 1e-10 * max(1.0, abs(ref))


def test_backend_selection_env(monkeypatch):
    # The package-level import honors SALPETER_BOUNDS_PURE; reload in a
    # subprocess-free way by exercising the selection logic directly.
    import importlib

    import salpeter_bounds.kernels as kernels

    monkeypatch.setenv("SALPETER_BOUNDS_PURE", "1")
    reloaded = importlib.reload(kernels)
    assert reloaded.BACKEND == "pure"
    monkeypatch.delenv("SALPETER_BOUNDS_PURE")
    restored = importlib.reload(kernels)
    assert restored.BACKEND in ("compiled", "pure")
