"""Kernel backend selection.

The hot numeric paths (polynomial evaluation, gradients, simplex projection,
ascent, grid enumeration) exist twice: numba-compiled and pure numpy.  The
environment variable ``HYPERLAG_BACKEND`` picks one:

    HYPERLAG_BACKEND=numba   force the compiled kernels (error if unavailable)
    HYPERLAG_BACKEND=numpy   force the pure-numpy fallback
    unset / "auto"           numba when importable, numpy otherwise
"""

from __future__ import annotations

import os

from . import _kernels_numpy

ENV_VAR = "HYPERLAG_BACKEND"
BACKENDS = ("numba", "numpy")


def get_kernels(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")


def _select() -> tuple[str, object]:
    requested = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if requested == "auto":
        try:
            return "numba", get_kernels("numba")
        except ImportError:
            return "numpy", _kernels_numpy
    return requested, get_kernels(requested)


BACKEND, kernels = _select()
