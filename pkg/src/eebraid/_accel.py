"""Backend selection for the hot kernels.

Set ``EEBRAID_PURE_NUMPY=1`` to force the vectorized numpy implementations
even when numba is importable.  :func:`use_backend` switches at runtime (the
tests and the benchmark use it to run both paths side by side).
"""

from __future__ import annotations

import contextlib
import os

try:  # numba is optional at runtime
    import numba as _numba
except ImportError:  # pragma: no cover - exercised only without numba
    _numba = None

ENV_FLAG = "EEBRAID_PURE_NUMPY"

HAVE_NUMBA = _numba is not None
_forced_numpy = os.environ.get(ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")
_backend = "numba" if HAVE_NUMBA and not _forced_numpy else "numpy"


def njit(fn):
    """``numba.njit(cache=True)`` when numba is present, else the plain function."""
    if _numba is None:
        return fn
    return _numba.njit(cache=True)(fn)


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextlib.contextmanager
def use_backend(name: str):
    prev = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)
