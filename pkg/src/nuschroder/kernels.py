"""Kernel selection: the compiled extension if it was built, else pure Python.

Set ``NUSCHRODER_PURE=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("NUSCHRODER_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

enum_words = _impl.enum_words
count_by_diag = _impl.count_by_diag
