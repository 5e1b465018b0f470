"""Select the congruence-closure kernel at import time.

The compiled extension is preferred when present; set MULTIFRAC_PURE=1 in
the environment to force the pure-Python kernel (used by the benchmark and
by tests that pin the fallback path).
"""

import os

if os.environ.get("MULTIFRAC_PURE"):
    from ._closure_py import BACKEND, congruence_class
else:
    try:
        from ._closure_cy import BACKEND, congruence_class  # type: ignore[attr-defined]
    except ImportError:
        from ._closure_py import BACKEND, congruence_class

__all__ = ["congruence_class", "BACKEND", "kernel_backend"]


def kernel_backend() -> str:
    """Name of the kernel in use: "cython" or "python"."""
    return BACKEND
