"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` takes over.  Setting ``RSKEYCHAIN_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load() -> ModuleType:
    if os.environ.get("RSKEYCHAIN_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels
    return _ckernels


def available() -> dict[str, ModuleType]:
    """All importable backends keyed by name (used by tests and the benchmark)."""
    found = {_pykernels.NAME: _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found[_ckernels.NAME] = _ckernels
    return found


kernels = _load()
BACKEND = kernels.NAME
