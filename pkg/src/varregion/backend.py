"""Kernel backend selection.

The quadrature kernels exist twice: a numba-jitted version and a pure-numpy
fallback with identical semantics. ``VARREGION_BACKEND`` picks one:

    VARREGION_BACKEND=numba   require the jitted kernels (error if numba missing)
    VARREGION_BACKEND=numpy   force the pure-numpy path
    unset                     numba when importable, numpy otherwise
"""

from __future__ import annotations

import os
import warnings

_CACHE = {}


def kernels_for(name: str):
    """Return the kernel module for an explicit backend name."""
    if name not in _CACHE:
        if name == "numba":
            from . import _kernels_numba as mod
        elif name == "numpy":
            from . import _kernels_numpy as mod
        else:
            raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")
        _CACHE[name] = mod
    return _CACHE[name]


def backend_name() -> str:
    """Resolve the active backend name from the environment."""
    requested = os.environ.get("VARREGION_BACKEND", "").strip().lower()
    if requested in ("numba", "numpy"):
        return requested
    if requested:
        raise ValueError(f"VARREGION_BACKEND={requested!r} not recognized")
    try:
        import numba  # noqa: F401
    except ImportError:
        warnings.warn("numba not importable; falling back to the numpy kernels")
        return "numpy"
    return "numba"


def kernels():
    """The kernel module selected by the environment."""
    return kernels_for(backend_name())


def thread_count() -> int:
    """Worker cap from VARREGION_THREADS (default 1 = sequential)."""
    raw = os.environ.get("VARREGION_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("VARREGION_THREADS must be >= 1")
    return n
