"""Build script for the optional compiled scan kernel.

The package is pure Python plus one Cython extension for the subset
scan.  If Cython or a C compiler is unavailable the build falls back to
a pure-Python install; `arrowsimp.modsimp` then selects the `_scan_py`
kernel at import.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/arrowsimp/_scan.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
