"""Backend selection for the hot loops.

The compiled extension ``largeness._ckernels`` is used when it imports;
otherwise the pure-Python twins in ``largeness._pykernels`` are used.  Set
``LARGENESS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("LARGENESS_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

fs_sums = _impl.fs_sums
positive_differences = _impl.positive_differences
cr_scan = _impl.cr_scan
ex_law_scan = _impl.ex_law_scan

__all__ = [
    "BACKEND",
    "fs_sums",
    "positive_differences",
    "cr_scan",
    "ex_law_scan",
]
