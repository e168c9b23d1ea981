# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled lowest-eigenvalue kernels for symmetric tridiagonal matrices.

Strategy: Sturm-sequence bisection starting from the Gershgorin
enclosure, which certifies a bracket [lo, hi] containing exactly the
smallest eigenvalue, followed by shifted inverse iteration and a final
Rayleigh quotient.

Two entry points: a generic one taking (diag, off), and a structured
one for finite-difference radial matrices diag = 2c + V, off = -c with
c = 1/h^2.  The structured path never forms 2c + V explicitly: the
Sturm recurrence runs in units of c with O(1) pivots, and the Rayleigh
quotient uses the stencil identity

    <x|T|x> = c [x_1^2 + x_n^2 + sum (x_i - x_{i+1})^2] + sum V_i x_i^2,

a sum of nonnegative terms.  This sidesteps the eps * ||T|| ~ eps / h^2
absolute error floor that generic extraction hits when 2/h^2 dwarfs the
eigenvalue, which matters for extrapolation at tight tolerances.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

import numpy as np

__all__ = [
    "lowest_eigenvalue",
    "radial_lowest_eigenvalue",
    "eigenvalue_count_below",
]

DEF MAX_BISECT = 220
DEF DBL_EPS = 2.220446049250313e-16


cdef double _pivmin(double e2max) noexcept nogil:
    cdef double m = e2max if e2max > 0.0 else 1.0
    m = m * 1e-300
    return m if m > 5e-324 else 5e-324


cdef Py_ssize_t _negcount(const double* d, const double* e2, Py_ssize_t n,
                          double x, double pivmin) noexcept nogil:
    """Number of eigenvalues strictly below x (LDL^T pivot sign count)."""
    cdef double q = d[0] - x
    cdef Py_ssize_t i, cnt = 0
    if q < 0.0:
        cnt += 1
    for i in range(1, n):
        if fabs(q) < pivmin:
            q = -pivmin if q < 0.0 else pivmin
        q = d[i] - x - e2[i - 1] / q
        if q < 0.0:
            cnt += 1
    return cnt


cdef int _inverse_iteration(const double* d, const double* e, Py_ssize_t n,
                            double sigma, double* x, double* piv,
                            double* rayleigh) noexcept nogil:
    """Two Thomas solves of (T - sigma I) x = b; writes the Rayleigh quotient.

    Returns nonzero when a pivot degenerates, in which case the caller
    keeps the bisection midpoint.
    """
    cdef Py_ssize_t i
    cdef double w, nrm, num
    cdef int it

    for i in range(n):
        x[i] = 1.0
    for it in range(2):
        piv[0] = d[0] - sigma
        if piv[0] == 0.0:
            return 1
        for i in range(1, n):
            w = e[i - 1] / piv[i - 1]
            piv[i] = d[i] - sigma - w * e[i - 1]
            if piv[i] == 0.0:
                return 1
            x[i] = x[i] - w * x[i - 1]
        x[n - 1] = x[n - 1] / piv[n - 1]
        for i in range(n - 2, -1, -1):
            x[i] = (x[i] - e[i] * x[i + 1]) / piv[i]
        nrm = 0.0
        for i in range(n):
            nrm += x[i] * x[i]
        nrm = sqrt(nrm)
        if nrm == 0.0 or nrm != nrm:
            return 1
        for i in range(n):
            x[i] = x[i] / nrm

    num = 0.0
    for i in range(n):
        num += d[i] * x[i] * x[i]
    for i in range(n - 1):
        num += 2.0 * e[i] * x[i] * x[i + 1]
    rayleigh[0] = num
    return 0


def eigenvalue_count_below(diag, off, double x):
    """Count eigenvalues of the tridiagonal matrix strictly below x."""
    d_arr = np.ascontiguousarray(diag, dtype=np.float64)
    e_arr = np.ascontiguousarray(off, dtype=np.float64)
    cdef double[::1] d = d_arr
    cdef Py_ssize_t n = d.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if e_arr.shape[0] != n - 1:
        raise ValueError("off-diagonal length must be n - 1")
    if n == 1:
        return 1 if d[0] < x else 0

    e2_arr = e_arr * e_arr
    cdef double[::1] e2 = e2_arr
    cdef double pm = _pivmin(float(np.max(e2_arr)))
    cdef Py_ssize_t cnt
    with nogil:
        cnt = _negcount(&d[0], &e2[0], n, x, pm)
    return int(cnt)


def lowest_eigenvalue(diag, off, double rel_tol=1e-14, bint polish=True,
                      bracket=None):
    """Smallest eigenvalue with a certified bracket.

    Parameters
    ----------
    diag, off:
        Diagonal (n) and off-diagonal (n - 1) of a real symmetric
        tridiagonal matrix.
    rel_tol:
        Bisection stops once the bracket width is below
        rel_tol * max(1, |midpoint|).
    polish:
        Refine the midpoint by inverse iteration plus a Rayleigh
        quotient, clipped into the certified bracket.
    bracket:
        Optional (lo, hi) hint.  Used only after verifying by Sturm
        count that it still encloses exactly the smallest eigenvalue;
        otherwise the Gershgorin enclosure is used.

    Returns
    -------
    (value, lo, hi):
        lo <= value <= hi and the matrix has exactly one eigenvalue in
        [lo, hi], its smallest.
    """
    d_arr = np.ascontiguousarray(diag, dtype=np.float64)
    e_arr = np.ascontiguousarray(off, dtype=np.float64)
    cdef double[::1] d = d_arr
    cdef Py_ssize_t n = d.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if e_arr.shape[0] != n - 1:
        raise ValueError("off-diagonal length must be n - 1")
    if not (np.all(np.isfinite(d_arr)) and np.all(np.isfinite(e_arr))):
        raise ValueError("matrix entries must be finite")
    if n == 1:
        return float(d[0]), float(d[0]), float(d[0])

    cdef double[::1] e = e_arr
    e2_arr = e_arr * e_arr
    cdef double[::1] e2 = e2_arr
    cdef double pm = _pivmin(float(np.max(e2_arr)))

    radius = np.abs(e_arr)
    reach = np.zeros(n)
    reach[:-1] += radius
    reach[1:] += radius
    cdef double lo = float(np.min(d_arr - reach))
    cdef double hi = float(np.max(d_arr + reach))
    lo -= 1e-12 * (1.0 if fabs(lo) < 1.0 else fabs(lo))
    hi += 1e-12 * (1.0 if fabs(hi) < 1.0 else fabs(hi))

    cdef double blo, bhi
    cdef Py_ssize_t c_lo, c_hi
    if bracket is not None:
        blo = float(bracket[0])
        bhi = float(bracket[1])
        if blo < bhi and blo > lo and bhi < hi:
            with nogil:
                c_lo = _negcount(&d[0], &e2[0], n, blo, pm)
                c_hi = _negcount(&d[0], &e2[0], n, bhi, pm)
            if c_lo == 0 and c_hi == 1:
                lo = blo
                hi = bhi

    cdef double mid = 0.0
    cdef Py_ssize_t it, cnt
    with nogil:
        for it in range(MAX_BISECT):
            mid = 0.5 * (lo + hi)
            if hi - lo <= rel_tol * (1.0 if fabs(mid) < 1.0 else fabs(mid)):
                break
            if mid <= lo or mid >= hi:
                break
            cnt = _negcount(&d[0], &e2[0], n, mid, pm)
            if cnt >= 1:
                hi = mid
            else:
                lo = mid

    cdef double lam = 0.5 * (lo + hi)
    cdef double sigma, gap, rq
    cdef double* x
    cdef double* piv
    cdef int bad
    if polish:
        gap = hi - lo
        if gap < 1e-15 * (1.0 if fabs(lo) < 1.0 else fabs(lo)):
            gap = 1e-15 * (1.0 if fabs(lo) < 1.0 else fabs(lo))
        sigma = lo - gap
        x = <double*> malloc(n * sizeof(double))
        piv = <double*> malloc(n * sizeof(double))
        if x != NULL and piv != NULL:
            rq = lam
            with nogil:
                bad = _inverse_iteration(&d[0], &e[0], n, sigma, x, piv, &rq)
            if not bad and rq == rq:
                if rq < lo:
                    lam = lo
                elif rq > hi:
                    lam = hi
                else:
                    lam = rq
        if x != NULL:
            free(x)
        if piv != NULL:
            free(piv)
    return float(lam), float(lo), float(hi)


cdef Py_ssize_t _t_negcount(const double* v, Py_ssize_t n, double x,
                            double invc) noexcept nogil:
    """Sturm count for diag = 2c + v, off = -c, in units of c."""
    cdef double t = 2.0 + (v[0] - x) * invc
    cdef Py_ssize_t i, cnt = 0
    if t < 0.0:
        cnt += 1
    for i in range(1, n):
        if fabs(t) < 1e-300:
            t = -1e-300 if t < 0.0 else 1e-300
        t = 2.0 + (v[i] - x) * invc - 1.0 / t
        if t < 0.0:
            cnt += 1
    return cnt


cdef int _radial_polish(const double* v, Py_ssize_t n, double c, double sigma,
                        double* x, double* piv, double* out) noexcept nogil:
    """Inverse iteration against the shift sigma plus a stencil Rayleigh
    quotient; pivots are kept in units of c so nothing large is formed."""
    cdef Py_ssize_t i
    cdef double invc = 1.0 / c, t, nrm, rq, diff
    cdef int it

    for i in range(n):
        x[i] = 1.0
    for it in range(2):
        t = 2.0 + (v[0] - sigma) * invc
        if t == 0.0 or t != t:
            return 1
        piv[0] = t
        for i in range(1, n):
            t = 2.0 + (v[i] - sigma) * invc - 1.0 / piv[i - 1]
            if t == 0.0 or t != t:
                return 1
            piv[i] = t
            x[i] = x[i] + x[i - 1] / piv[i - 1]
        x[n - 1] = x[n - 1] / (c * piv[n - 1])
        for i in range(n - 2, -1, -1):
            x[i] = x[i] / (c * piv[i]) + x[i + 1] / piv[i]
        nrm = 0.0
        for i in range(n):
            nrm += x[i] * x[i]
        nrm = sqrt(nrm)
        if nrm == 0.0 or nrm != nrm:
            return 1
        for i in range(n):
            x[i] = x[i] / nrm

    rq = x[0] * x[0] + x[n - 1] * x[n - 1]
    for i in range(n - 1):
        diff = x[i] - x[i + 1]
        rq += diff * diff
    rq *= c
    for i in range(n):
        rq += v[i] * x[i] * x[i]
    out[0] = rq
    return 0


def radial_lowest_eigenvalue(v, double c, double rel_tol=1e-14, bracket=None):
    """Smallest eigenvalue of tridiag(diag = 2c + v, off = -c).

    Returns (value, lo, hi) where [lo, hi] is the Sturm bisection
    bracket and value is the stencil Rayleigh quotient, which is
    accurate to near machine precision in the eigenvalue itself and may
    therefore sit outside [lo, hi] by up to the Sturm roundoff
    allowance ~64 eps (4c + |v|); beyond that it is clipped.
    """
    v_arr = np.ascontiguousarray(v, dtype=np.float64)
    cdef double[::1] vv = v_arr
    cdef Py_ssize_t n = vv.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if not c > 0.0:
        raise ValueError("need positive off-diagonal scale c")
    if not np.all(np.isfinite(v_arr)):
        raise ValueError("potential values must be finite")
    if n == 1:
        val = float(vv[0] + 2.0 * c)
        return val, val, val

    cdef double invc = 1.0 / c
    cdef double vmin = float(np.min(v_arr))
    cdef double vmax = float(np.max(v_arr))
    cdef double lo = vmin - 1e-12 * (1.0 if fabs(vmin) < 1.0 else fabs(vmin))
    cdef double hi = vmax + 4.0 * c
    hi += 1e-12 * (1.0 if fabs(hi) < 1.0 else fabs(hi))

    cdef double blo, bhi
    cdef Py_ssize_t c_lo, c_hi
    if bracket is not None:
        blo = float(bracket[0])
        bhi = float(bracket[1])
        if blo < bhi and blo > lo and bhi < hi:
            with nogil:
                c_lo = _t_negcount(&vv[0], n, blo, invc)
                c_hi = _t_negcount(&vv[0], n, bhi, invc)
            if c_lo == 0 and c_hi == 1:
                lo = blo
                hi = bhi

    cdef double mid = 0.0
    cdef Py_ssize_t it, cnt
    with nogil:
        for it in range(MAX_BISECT):
            mid = 0.5 * (lo + hi)
            if hi - lo <= rel_tol * (1.0 if fabs(mid) < 1.0 else fabs(mid)):
                break
            if mid <= lo or mid >= hi:
                break
            cnt = _t_negcount(&vv[0], n, mid, invc)
            if cnt >= 1:
                hi = mid
            else:
                lo = mid

    cdef double lam = 0.5 * (lo + hi)
    cdef double gap = 3.0 * (hi - lo)
    cdef double gap_floor = 1e-13 * (1.0 if fabs(lo) < 1.0 else fabs(lo))
    cdef double sigma = lo - (gap if gap > gap_floor else gap_floor)
    cdef double rq = lam
    cdef double allow = 64.0 * DBL_EPS * (4.0 * c + fabs(vmax) + fabs(vmin))
    cdef double* x = <double*> malloc(n * sizeof(double))
    cdef double* piv = <double*> malloc(n * sizeof(double))
    cdef int bad = 1
    if x != NULL and piv != NULL:
        with nogil:
            bad = _radial_polish(&vv[0], n, c, sigma, x, piv, &rq)
    if x != NULL:
        free(x)
    if piv != NULL:
        free(piv)
    if not bad and rq == rq:
        if rq < lo - allow:
            lam = lo
        elif rq > hi + allow:
            lam = hi
        else:
            lam = rq
    return float(lam), float(lo), float(hi)
