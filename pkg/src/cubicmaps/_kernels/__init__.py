"""Kernel backend selection.

The hot inner loops (h-sequence recursion, jet propagation, rotation-system
census) exist twice: a compiled Cython module and a pure-Python reference.
The compiled module is preferred when importable; CUBICMAPS_PURE_PYTHON=1
forces the pure fallback.  Both backends execute the same floating-point
operations in the same order, so results are bit-identical either way.
"""

from __future__ import annotations

import os

from . import _pyref

_FORCE_PURE = os.environ.get("CUBICMAPS_PURE_PYTHON", "") not in ("", "0")

_compiled = None
if not _FORCE_PURE:
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_active = _compiled if _compiled is not None else _pyref

BACKEND = "compiled" if _compiled is not None else "pure-python"

h_tail = _active.h_tail
jet_tail = _active.jet_tail
census = _active.census


def backend() -> str:
    """Name of the backend selected at import time."""
    return BACKEND


def backends() -> dict:
    """All importable backends, keyed by name (for tests and benchmarks)."""
    out = {"pure-python": _pyref}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
