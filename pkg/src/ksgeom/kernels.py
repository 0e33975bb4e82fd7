"""Selects the coloring-search kernel at import time.

Prefers the compiled extension (ksgeom._solver, built from _solver.pyx)
and falls back to the pure-Python twin. Set KSGEOM_SOLVER=py or =c to
force a backend; forcing c without the extension built raises at import.
"""

from __future__ import annotations

import os

from . import _solver_py

try:
    from . import _solver as _solver_c  # type: ignore[attr-defined]
except ImportError:
    _solver_c = None

_forced = os.environ.get("KSGEOM_SOLVER", "").strip().lower()
if _forced == "py":
    BACKEND = "py"
elif _forced == "c":
    if _solver_c is None:
        raise ImportError("KSGEOM_SOLVER=c but the compiled kernel is not built")
    BACKEND = "c"
else:
    BACKEND = "c" if _solver_c is not None else "py"

MODE_COUNT = _solver_py.MODE_COUNT
MODE_FIRST_WITNESS = _solver_py.MODE_FIRST_WITNESS
MODE_PROVE_NONE = _solver_py.MODE_PROVE_NONE


def available_backends() -> dict[str, object]:
    backends: dict[str, object] = {"py": _solver_py.solve_kernel}
    if _solver_c is not None:
        backends["c"] = _solver_c.solve_kernel
    return backends


def solve_kernel(n, triads, pairs, mode, backend: str | None = None):
    impl = available_backends()[backend or BACKEND]
    return impl(n, triads, pairs, mode)
