"""Backend selection for the integer kernels.

The compiled extension is used when it imports and the inputs fit in 64-bit
arithmetic; otherwise the pure-Python versions run.  Set
``SQUEEZE_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

_LIMIT = 1 << 62

_compiled = None
if os.environ.get("SQUEEZE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def triangle_count(A: int, B: int, p: int, q: int, side: int) -> int:
    if _compiled is not None:
        rhs = q * A + p * B
        if rhs < _LIMIT and (rhs // p + 1) * (rhs // q + 2) < _LIMIT:
            return _compiled.triangle_count(A, B, p, q, side)
    return _pykernels.triangle_count(A, B, p, q, side)


def diophantine_parts(d: int, cap: int) -> list[tuple[int, ...]]:
    if _compiled is not None and d < 1 << 20:
        return _compiled.diophantine_parts(d, cap)
    return _pykernels.diophantine_parts(d, cap)


def diagonal_ratio_max(p: int, q: int, count: int) -> tuple[int, int]:
    # generated values stay below ~2*sqrt(2*p*q*count); cross products below 2**58
    if _compiled is not None and p < 1 << 16 and q < 1 << 16 and count < 1 << 22:
        return _compiled.diagonal_ratio_max(p, q, count)
    return _pykernels.diagonal_ratio_max(p, q, count)
