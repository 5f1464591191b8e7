"""Gate-application kernels.

The compiled Cython core is preferred when it was built; otherwise the
NumPy fallback is used.  Set ``RYPREP_KERNEL=python`` to force the fallback.
``BACKEND`` names the selected implementation.
"""

import os

from . import _fallback

try:
    from . import _core
except ImportError:
    _core = None

if _core is not None and os.environ.get("RYPREP_KERNEL", "").strip().lower() != "python":
    BACKEND = "cython"
    apply_ry = _core.apply_ry
    apply_x = _core.apply_x
else:
    BACKEND = "python"
    apply_ry = _fallback.apply_ry
    apply_x = _fallback.apply_x

__all__ = ["BACKEND", "apply_ry", "apply_x"]
