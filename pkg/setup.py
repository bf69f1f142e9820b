"""Build hook: compiles the optional Cython kernel extension.

If Cython or a C++ toolchain is unavailable the build still succeeds;
the package falls back to the pure-Python kernels at import time.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cfbounds/_ckernels.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    print(f"skipping compiled kernels: {exc}", file=sys.stderr)

setup(ext_modules=ext_modules)
