"""Kernel backend selection.

``ACTA_BACKEND=numpy`` forces the pure-numpy path even when numba is
installed; ``ACTA_BACKEND=numba`` (the default when numba imports) JIT-compiles
the loop kernels.  The choice is made once, at import time.
"""

from __future__ import annotations

import os

_requested = os.environ.get("ACTA_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(f"ACTA_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

if _requested == "numba" and not HAVE_NUMBA:  # pragma: no cover
    raise ImportError("ACTA_BACKEND=numba but numba is not importable")

BACKEND = "numpy" if _requested == "numpy" or not HAVE_NUMBA else "numba"


def njit(func):
    """Compile ``func`` with numba when available, else return it unchanged.

    Compilation happens regardless of ``BACKEND`` so that the benchmark can
    time both paths in one process; dispatch in :mod:`acta.kernels` decides
    which one callers get.
    """
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func  # pragma: no cover
