"""Kernel backend selection.

The compiled ``_ckernel`` extension is used when it was built; otherwise the
pure-Python ``_pykernel`` takes over. Setting ``MINCOSTID_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pykernel

try:
    if os.environ.get("MINCOSTID_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKENDS = {"python": _pykernel.GraphKernel}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel.GraphKernel

_active = "cython" if _ckernel is not None else "python"


def backend():
    """Name of the kernel backend used for newly built graphs."""
    return _active


def set_backend(name):
    """Switch the backend for graphs whose kernel has not been built yet."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}")
    _active = name


def make_kernel(n, parents, bidirected, name=None):
    return BACKENDS[name or _active](n, parents, bidirected)
