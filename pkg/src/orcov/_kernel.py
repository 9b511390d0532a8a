"""Kernel selection: compiled extension if built, pure Python otherwise.

Set ORCOV_PURE=1 to force the pure kernel (benchmarks use this to
compare backends).  Both kernels expose mif_count / mif_masks with
identical semantics.
"""

from __future__ import annotations

import os

from . import _purecore

if os.environ.get("ORCOV_PURE") == "1":
    _impl = _purecore
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecore

BACKEND: str = _impl.BACKEND
KERNEL_KMAX: int = _impl.KERNEL_KMAX
mif_count = _impl.mif_count
mif_masks = _impl.mif_masks
