"""Hot kernels with two interchangeable backends.

``numba``  loop kernels from ``_loops`` compiled with ``@njit``.
``numpy``  broadcast-tensor kernels from ``_vector``.

The backend is picked once at import: numba when importable unless the
environment variable ``MPTG_BACKEND`` is ``numpy`` (``MPTG_DISABLE_NUMBA=1``
is accepted as well).  Both backends return identical witnesses and search
results; ``use_backend`` switches at runtime, mostly for tests and the
benchmark.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

from . import _loops, _vector, codes

HAVE_NUMBA = _loops.HAVE_NUMBA

_BACKENDS = {"numpy": _vector}
if HAVE_NUMBA:
    _BACKENDS["numba"] = _loops


def _initial_backend() -> str:
    requested = os.environ.get("MPTG_BACKEND", "").strip().lower()
    if os.environ.get("MPTG_DISABLE_NUMBA", "") not in ("", "0"):
        requested = "numpy"
    if requested in _BACKENDS:
        return requested
    if requested and requested not in ("numba", "numpy"):
        raise ValueError(f"MPTG_BACKEND must be 'numba' or 'numpy', got {requested!r}")
    return "numba" if HAVE_NUMBA else "numpy"


_active = _initial_backend()


def backend() -> str:
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    _active = name


@contextmanager
def use_backend(name: str):
    prev = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def _impl():
    return _BACKENDS[_active]


_FIRST = {
    codes.THREE_POINT: "first_3point",
    codes.FOUR_POINT: "first_4point",
    codes.FIVE_POINT_1: "first_5point_1",
    codes.FIVE_POINT_2: "first_5point_2",
    codes.SIX_POINT: "first_6point",
    codes.PROPER_MAXTOL: "first_proper_maxtol",
}


def first_violation(a: np.ndarray, flag: int) -> tuple[int, ...] | None:
    """Lexicographically least tuple violating one condition, or None."""
    res = getattr(_impl(), _FIRST[flag])(np.ascontiguousarray(a, dtype=np.uint8))
    return tuple(int(x) for x in res) if len(res) else None


def search(a: np.ndarray, code: int, first_lo: int = 0, first_hi: int | None = None):
    """Backtracking search; see ``_loops.search``."""
    a = np.ascontiguousarray(a, dtype=np.uint8)
    if first_hi is None:
        first_hi = a.shape[0]
    found, perm, nodes, prunes = _impl().search(a, code, first_lo, first_hi)
    return bool(found), tuple(int(x) for x in perm), int(nodes), int(prunes)


def subset_omega_chi(masks) -> tuple[np.ndarray, np.ndarray]:
    return _impl().subset_omega_chi(np.asarray(masks, dtype=np.int64))
