"""Kernel backend selection.

Hot numeric kernels are written once, against the numba nopython subset,
and compiled with ``@njit`` unless the ``CZDO_BACKEND`` environment
variable selects the plain interpreted path:

    CZDO_BACKEND=numba   compile kernels (default when numba imports)
    CZDO_BACKEND=numpy   run the same source uncompiled

The choice is fixed at import time.  Compiled kernels keep their original
function under ``.py_func``, which is what the benchmark and the
backend-equivalence tests use to compare both paths in one process.
"""

import os


def _resolve() -> str:
    name = os.environ.get("CZDO_BACKEND", "").strip().lower()
    if name in ("numpy", "python"):
        return "numpy"
    if name not in ("", "numba"):
        raise ValueError(f"CZDO_BACKEND must be 'numba' or 'numpy', got {name!r}")
    try:
        import numba  # noqa: F401
    except ImportError:
        if name == "numba":
            raise
        return "numpy"
    return "numba"


BACKEND = _resolve()


def kernel_jit(fn):
    """Decorator applied to every hot kernel: njit or identity."""
    if BACKEND == "numba":
        from numba import njit

        return njit(cache=True, nogil=True)(fn)
    return fn
