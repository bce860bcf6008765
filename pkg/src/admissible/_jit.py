"""numba switch for the enumeration kernels.

Set ``ADMISSIBLE_NO_JIT=1`` to run every kernel as plain Python over the same
numpy arrays.  The undecorated function of a compiled kernel is always
reachable as ``kernel.py_func``.
"""

import os

JIT_ENABLED = os.environ.get("ADMISSIBLE_NO_JIT", "").strip().lower() not in ("1", "true", "yes")

if JIT_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a hard dependency
        JIT_ENABLED = False

if JIT_ENABLED:

    def njit(fn):
        return _njit(cache=True, nogil=True)(fn)

else:

    def njit(fn):
        fn.py_func = fn
        return fn
