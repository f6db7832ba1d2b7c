"""Picks the compiled enumeration kernel when it is importable.

Set ``MAHONIAN_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

import os

from . import _pykernel

BACKEND = "python"
histogram = _pykernel.histogram

if not os.environ.get("MAHONIAN_PURE_PYTHON"):
    try:
        from . import _kernel
    except ImportError:  # extension not built
        _kernel = None
    if _kernel is not None:
        histogram = _kernel.histogram
        BACKEND = "cython"

FAMILIES = _pykernel.FAMILIES
STATS = _pykernel.STATS
SIGNS = _pykernel.SIGNS
RESTRICTS = _pykernel.RESTRICTS
BOUNDARIES = _pykernel.BOUNDARIES

__all__ = ["BACKEND", "histogram", "FAMILIES", "STATS", "SIGNS", "RESTRICTS", "BOUNDARIES"]
