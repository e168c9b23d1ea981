"""Pure numpy fallback for the tridiagonal lowest-eigenvalue kernel.

Same certified-bracket contract as the compiled module.  Instead of
scalar bisection it multisects: each pass evaluates the Sturm count at a
whole batch of interior shifts, vectorised across the batch, so each
sweep over the matrix shrinks the bracket by (batch + 1)x.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "lowest_eigenvalue",
    "radial_lowest_eigenvalue",
    "eigenvalue_count_below",
]

_MAX_PASSES = 48
_BATCH = 63


def _pivmin(e2: np.ndarray) -> float:
    m = float(e2.max()) if e2.size else 1.0
    if m <= 0.0:
        m = 1.0
    return max(m * 1e-300, 5e-324)


def _counts(d: np.ndarray, e2: np.ndarray, xs: np.ndarray, pivmin: float) -> np.ndarray:
    """Sturm counts below each shift in xs, one matrix sweep for the batch."""
    q = d[0] - xs
    cnt = (q < 0.0).astype(np.int64)
    for i in range(1, d.size):
        np.copyto(q, np.copysign(pivmin, q), where=np.abs(q) < pivmin)
        q = d[i] - xs - e2[i - 1] / q
        cnt += q < 0.0
    return cnt


def _validate(diag, off):
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e = np.ascontiguousarray(off, dtype=np.float64)
    if d.size == 0:
        raise ValueError("empty matrix")
    if e.size != d.size - 1:
        raise ValueError("off-diagonal length must be n - 1")
    return d, e


def eigenvalue_count_below(diag, off, x: float) -> int:
    """Count eigenvalues of the tridiagonal matrix strictly below x."""
    d, e = _validate(diag, off)
    if d.size == 1:
        return int(d[0] < x)
    e2 = e * e
    return int(_counts(d, e2, np.array([float(x)]), _pivmin(e2))[0])


def lowest_eigenvalue(diag, off, rel_tol: float = 1e-14, polish: bool = True,
                      bracket=None):
    """Smallest eigenvalue with a certified bracket; see the compiled twin.

    The multisected bracket already reaches rel_tol, so the fallback
    returns the bracket midpoint and accepts polish for signature
    compatibility only.
    """
    d, e = _validate(diag, off)
    if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
        raise ValueError("matrix entries must be finite")
    if d.size == 1:
        v = float(d[0])
        return v, v, v

    e2 = e * e
    pivmin = _pivmin(e2)
    radius = np.abs(e)
    reach = np.zeros(d.size)
    reach[:-1] += radius
    reach[1:] += radius
    lo = float(np.min(d - reach))
    hi = float(np.max(d + reach))
    lo -= 1e-12 * max(1.0, abs(lo))
    hi += 1e-12 * max(1.0, abs(hi))

    if bracket is not None:
        blo, bhi = float(bracket[0]), float(bracket[1])
        if lo < blo < bhi < hi:
            c_lo, c_hi = _counts(d, e2, np.array([blo, bhi]), pivmin)
            if c_lo == 0 and c_hi == 1:
                lo, hi = blo, bhi

    for _ in range(_MAX_PASSES):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(1.0, abs(mid)):
            break
        xs = np.linspace(lo, hi, _BATCH + 2)[1:-1]
        if xs[0] <= lo or xs[-1] >= hi:
            break
        cnt = _counts(d, e2, xs, pivmin)
        above = np.nonzero(cnt >= 1)[0]
        if above.size == 0:
            lo = float(xs[-1])
        elif above[0] == 0:
            hi = float(xs[0])
        else:
            lo = float(xs[above[0] - 1])
            hi = float(xs[above[0]])

    lam = 0.5 * (lo + hi)
    return float(lam), float(lo), float(hi)


def _t_counts(v: np.ndarray, xs: np.ndarray, invc: float) -> np.ndarray:
    """Sturm counts for diag = 2c + v, off = -c, run in units of c."""
    t = 2.0 + (v[0] - xs) * invc
    cnt = (t < 0.0).astype(np.int64)
    for i in range(1, v.size):
        np.copyto(t, np.copysign(1e-300, t), where=np.abs(t) < 1e-300)
        t = 2.0 + (v[i] - xs) * invc - 1.0 / t
        cnt += t < 0.0
    return cnt


def _radial_polish(v: np.ndarray, c: float, sigma: float):
    """Two shifted Thomas solves, pivots held in units of c, then the
    stencil Rayleigh quotient; returns None when a pivot degenerates."""
    n = v.size
    invc = 1.0 / c
    x = np.ones(n)
    piv = np.empty(n)
    for _ in range(2):
        shifted = 2.0 + (v - sigma) * invc
        t = float(shifted[0])
        if t == 0.0 or not np.isfinite(t):
            return None
        piv[0] = t
        for i in range(1, n):
            t = float(shifted[i]) - 1.0 / piv[i - 1]
            if t == 0.0 or not np.isfinite(t):
                return None
            piv[i] = t
            x[i] += x[i - 1] / piv[i - 1]
        x[n - 1] /= c * piv[n - 1]
        for i in range(n - 2, -1, -1):
            x[i] = x[i] / (c * piv[i]) + x[i + 1] / piv[i]
        nrm = float(np.linalg.norm(x))
        if nrm == 0.0 or not np.isfinite(nrm):
            return None
        x /= nrm
    diff = x[:-1] - x[1:]
    rq = c * (x[0] * x[0] + x[-1] * x[-1] + float(diff @ diff))
    rq += float((v * x) @ x)
    return rq if np.isfinite(rq) else None


def radial_lowest_eigenvalue(v, c: float, rel_tol: float = 1e-14,
                             bracket=None):
    """Smallest eigenvalue of tridiag(diag = 2c + v, off = -c).

    Mirrors the compiled structured kernel: the Sturm recurrence and the
    Thomas pivots stay in units of c so 2c + v is never formed, and the
    returned value is a stencil Rayleigh quotient clipped into the
    bracket up to the Sturm roundoff allowance ~64 eps (4c + |v|).
    """
    v = np.ascontiguousarray(v, dtype=np.float64)
    c = float(c)
    if v.size == 0:
        raise ValueError("empty matrix")
    if not c > 0.0:
        raise ValueError("need positive off-diagonal scale c")
    if not np.all(np.isfinite(v)):
        raise ValueError("potential values must be finite")
    if v.size == 1:
        val = float(v[0] + 2.0 * c)
        return val, val, val

    invc = 1.0 / c
    vmin = float(v.min())
    vmax = float(v.max())
    lo = vmin - 1e-12 * max(1.0, abs(vmin))
    hi = vmax + 4.0 * c
    hi += 1e-12 * max(1.0, abs(hi))

    if bracket is not None:
        blo, bhi = float(bracket[0]), float(bracket[1])
        if lo < blo < bhi < hi:
            c_lo, c_hi = _t_counts(v, np.array([blo, bhi]), invc)
            if c_lo == 0 and c_hi == 1:
                lo, hi = blo, bhi

    for _ in range(_MAX_PASSES):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(1.0, abs(mid)):
            break
        xs = np.linspace(lo, hi, _BATCH + 2)[1:-1]
        if xs[0] <= lo or xs[-1] >= hi:
            break
        cnt = _t_counts(v, xs, invc)
        above = np.nonzero(cnt >= 1)[0]
        if above.size == 0:
            lo = float(xs[-1])
        elif above[0] == 0:
            hi = float(xs[0])
        else:
            lo = float(xs[above[0] - 1])
            hi = float(xs[above[0]])

    lam = 0.5 * (lo + hi)
    sigma = lo - max(3.0 * (hi - lo), 1e-13 * max(1.0, abs(lo)))
    allow = 64.0 * np.finfo(np.float64).eps * (4.0 * c + abs(vmax) + abs(vmin))
    rq = _radial_polish(v, c, sigma)
    if rq is not None:
        if rq < lo - allow:
            lam = lo
        elif rq > hi + allow:
            lam = hi
        else:
            lam = rq
    return float(lam), float(lo), float(hi)
