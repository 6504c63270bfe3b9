"""Float kernel selection: compiled extension if present, else pure Python.

Set ``DIRACSPLIT_PURE_PYTHON=1`` to force the pure kernels (used by the
benchmark to compare the two).
"""

from __future__ import annotations

import os

if os.environ.get("DIRACSPLIT_PURE_PYTHON", "") not in ("", "0"):
    from . import pykernel as _impl
else:
    try:
        from . import _cykernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernel as _impl

mul = _impl.mul
mul_vec = _impl.mul_vec
max_abs = _impl.max_abs
max_abs_diff = _impl.max_abs_diff
expm = _impl.expm
IMPLEMENTATION: str = _impl.IMPLEMENTATION

__all__ = ["mul", "mul_vec", "max_abs", "max_abs_diff", "expm", "IMPLEMENTATION"]
