"""Optional numba acceleration.

Set ``ARTIN_DISABLE_NUMBA=1`` to force the plain Python/numpy code path. The
decorated functions keep a ``py_func`` attribute either way, so the
benchmark can time both paths in one process.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("ARTIN_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def jit(func):
    """``numba.njit(cache=True)`` when available, identity otherwise."""
    if HAS_NUMBA:
        return _njit(cache=True)(func)
    func.py_func = func
    return func
