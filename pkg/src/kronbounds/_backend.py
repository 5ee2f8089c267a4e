"""Kernel backend selection.

The compiled extension is used when it imports; set ``KRONBOUNDS_PURE=1``
to force the pure-Python kernels.
"""

import os

from . import _pykernels

pure = _pykernels

try:
    from . import _ckernels as compiled
except ImportError:
    compiled = None

if compiled is None or os.environ.get("KRONBOUNDS_PURE", "") not in ("", "0"):
    kernels = _pykernels
else:
    kernels = compiled

BACKEND = kernels.BACKEND
