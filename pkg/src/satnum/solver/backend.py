"""Kernel backend selection.

The numba kernels are the default; setting ``SATNUM_BACKEND=python`` forces
the pure-python fallback (and ``SATNUM_BACKEND=numba`` insists on numba,
failing loudly if it cannot be imported).
"""

from __future__ import annotations

import os

ENV_VAR = "SATNUM_BACKEND"
BACKENDS = ("numba", "python")

_modules: dict[str, object] = {}


def backend_name(explicit: str | None = None) -> str:
    """Resolve the backend to use: explicit arg > env var > auto-detect."""
    choice = explicit or os.environ.get(ENV_VAR, "").strip().lower() or None
    if choice is not None:
        if choice not in BACKENDS:
            raise ValueError(f"unknown backend {choice!r}; expected one of {BACKENDS}")
        return choice
    try:
        import numba  # noqa: F401
    except ImportError:
        return "python"
    return "numba"


def get_kernels(explicit: str | None = None):
    """Return the kernel module for the resolved backend."""
    name = backend_name(explicit)
    mod = _modules.get(name)
    if mod is None:
        if name == "numba":
            from . import kernels_numba as mod
        else:
            from . import kernels_py as mod
        _modules[name] = mod
    return mod
