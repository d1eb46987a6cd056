"""Kernel backend selection.

The compiled extension is used when it imports; set ``SUPERBBW_PURE=1`` to
force the numpy fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("SUPERBBW_PURE") != "1":
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

subset_sums = _impl.subset_sums
region_mask = _impl.region_mask

__all__ = ["BACKEND", "subset_sums", "region_mask"]
