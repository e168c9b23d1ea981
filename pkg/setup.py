"""Build script for the compiled tridiagonal eigenvalue kernel.

The package remains importable without the extension; a pure numpy
fallback is selected at import time when the compiled module is absent.
"""

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "salpeter_bounds.kernels._tridiag",
        ["src/salpeter_bounds/kernels/_tridiag.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level=3) if cythonize else [],
)
