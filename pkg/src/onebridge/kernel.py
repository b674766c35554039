"""Kernel backend selection.

Two implementations of the integer geometry kernel exist: a Cython extension
(_kernel_c) built optionally at install time, and a pure-Python twin
(_kernel_py).  The environment variable ONEBRIDGE_KERNEL forces a choice
("c" or "py"); by default the extension is used when importable.  The C
backend works on machine integers, so calls whose coordinates could overflow
int64 are routed to the Python twin regardless of the selection.
"""

from __future__ import annotations

import os
from typing import List, Optional, Sequence

from . import _kernel_py

_choice = os.environ.get("ONEBRIDGE_KERNEL", "auto").lower()
_c = None
if _choice in ("auto", "c"):
    try:
        from . import _kernel_c as _c  # type: ignore[attr-defined]
    except ImportError:
        _c = None
    if _choice == "c" and _c is None:
        raise ImportError(
            "ONEBRIDGE_KERNEL=c requested but the compiled kernel is not available"
        )
elif _choice == "py":
    _c = None
else:
    raise ValueError(f"ONEBRIDGE_KERNEL must be 'auto', 'c' or 'py', got {_choice!r}")

BACKEND = "c" if _c is not None else "python"

_INT64_SAFE = 1 << 60


def _fits(values: Sequence[int], limit: int = _INT64_SAFE) -> bool:
    return all(-limit < v < limit for v in values)


def polyline_selfcheck(xs: Sequence[int], ys: Sequence[int], period: int) -> Optional[str]:
    if _c is not None and period < _INT64_SAFE and _fits(xs) and _fits(ys):
        return _c.polyline_selfcheck(list(xs), list(ys), period)
    return _kernel_py.polyline_selfcheck(xs, ys, period)


def point_in_polygon(xs: Sequence[int], ys: Sequence[int], px: int, py: int) -> int:
    if _c is not None and _fits(xs) and _fits(ys) and _fits((px, py)):
        return _c.point_in_polygon(list(xs), list(ys), px, py)
    return _kernel_py.point_in_polygon(xs, ys, px, py)


def count_lattice_translates_inside(
    xs: Sequence[int], ys: Sequence[int], px: int, py: int, period: int
) -> int:
    if _c is not None and period < _INT64_SAFE and _fits(xs) and _fits(ys) and _fits((px, py)):
        return _c.count_lattice_translates_inside(list(xs), list(ys), px, py, period)
    return _kernel_py.count_lattice_translates_inside(xs, ys, px, py, period)


def winding_number(xs: Sequence[int], ys: Sequence[int], px: int, py: int) -> int:
    if _c is not None and _fits(xs) and _fits(ys) and _fits((px, py)):
        return _c.winding_number(list(xs), list(ys), px, py)
    return _kernel_py.winding_number(xs, ys, px, py)


def lattice_winding_sum(
    xs: Sequence[int], ys: Sequence[int], px: int, py: int, period: int
) -> int:
    if _c is not None and period < _INT64_SAFE and _fits(xs) and _fits(ys) and _fits((px, py)):
        return _c.lattice_winding_sum(list(xs), list(ys), px, py, period)
    return _kernel_py.lattice_winding_sum(xs, ys, px, py, period)


def backends() -> List[str]:
    """Names of the importable backends, compiled one first when present."""
    out = []
    if _c is not None:
        out.append("c")
    out.append("python")
    return out


def get_backend_module(name: str):
    if name == "python":
        return _kernel_py
    if name == "c":
        if _c is None:
            raise ImportError("compiled kernel not available")
        return _c
    raise ValueError(f"unknown backend {name!r}")
