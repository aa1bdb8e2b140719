"""Backend selection for the hot mask-sweep kernel.

The compiled extension is preferred when importable; otherwise the
pure-Python twin takes over with the same contract.  Set
CATX_BICLOSED_BACKEND=python or =cython to force a choice (forcing the
compiled backend raises if the extension is missing, instead of
silently degrading).
"""

from __future__ import annotations

import os

from catx import _biclosed_py

_forced = os.environ.get("CATX_BICLOSED_BACKEND")

if _forced == "python":
    _impl = _biclosed_py
    BACKEND = "python"
else:
    try:
        from catx import _biclosed_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        _impl = _biclosed_py
        BACKEND = "python"

biclosed_masks = _impl.biclosed_masks
