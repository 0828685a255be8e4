"""Backend selection for the hot elimination kernels.

The compiled extension is used when it imports cleanly; otherwise, or when
``FROBQUOT_PURE=1`` is set, the numpy fallback is used. Both expose the same
two functions and produce identical results.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("FROBQUOT_PURE", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback
        BACKEND = "python"

rref_modp = _impl.rref_modp
matmul_modp = _impl.matmul_modp

__all__ = ["BACKEND", "rref_modp", "matmul_modp"]
