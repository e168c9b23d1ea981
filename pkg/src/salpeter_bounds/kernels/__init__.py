"""Tridiagonal lowest-eigenvalue kernels.

The compiled Cython kernel is preferred; a pure numpy multisection
fallback keeps the package importable (and correct, just slower) when
the extension is unavailable.  Set SALPETER_BOUNDS_PURE=1 to force the
fallback, e.g. for benchmarking.
"""

import os

from . import _tridiag_py

if os.environ.get("SALPETER_BOUNDS_PURE") == "1":
    _impl = _tridiag_py
else:
    try:
        from . import _tridiag as _impl
    except ImportError:
        _impl = _tridiag_py

BACKEND = "compiled" if _impl is not _tridiag_py else "pure"

lowest_eigenvalue = _impl.lowest_eigenvalue
radial_lowest_eigenvalue = _impl.radial_lowest_eigenvalue
eigenvalue_count_below = _impl.eigenvalue_count_below

__all__ = [
    "lowest_eigenvalue",
    "radial_lowest_eigenvalue",
    "eigenvalue_count_below",
    "BACKEND",
]
