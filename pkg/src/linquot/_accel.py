"""Backend selection for the hot kernels.

``LINQUOT_BACKEND=numpy`` forces the pure-numpy path; the default is numba
when it imports cleanly. The choice is made once, at import time.
"""

import os

BACKEND_ENV = "LINQUOT_BACKEND"

_requested = os.environ.get(BACKEND_ENV, "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {_requested!r}")

HAS_NUMBA = False
if _requested == "numba":
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass

BACKEND = "numba" if HAS_NUMBA else "numpy"

if not HAS_NUMBA:

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def _wrap(f):
            return f

        return _wrap


def set_threads(k):
    """Cap numba's thread pool; a no-op on the numpy backend."""
    if HAS_NUMBA and k:
        import numba

        numba.set_num_threads(max(1, min(int(k), numba.config.NUMBA_NUM_THREADS)))
