"""Kernel backend selection.

The compiled extension is preferred when present; set the environment
variable ``CFBOUNDS_PURE_PYTHON=1`` to force the pure-Python kernels.
"""
from __future__ import annotations

import os

if os.environ.get("CFBOUNDS_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME

rational_cf_digits = kernels.rational_cf_digits
convergent_pairs = kernels.convergent_pairs
periodic_cf_digits = kernels.periodic_cf_digits
