"""Backend selection for the compiled kernels.

Set ``ORBIT_ENTROPY_BACKEND=numpy`` to bypass numba entirely; the default
``numba`` falls back to numpy silently when numba cannot be imported.
"""

import os

BACKEND_ENV = "ORBIT_ENTROPY_BACKEND"

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


def requested_backend():
    value = os.environ.get(BACKEND_ENV, "numba").strip().lower()
    if value not in ("numba", "numpy"):
        raise ValueError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {value!r}")
    return value


def use_numba():
    return NUMBA_AVAILABLE and requested_backend() == "numba"
