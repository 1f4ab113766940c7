"""Backend selection for the free-group word kernels.

The compiled extension is used when it imports; set ``BRAIDSURF_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _wordkernel_py as python_backend

try:
    if os.environ.get("BRAIDSURF_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _wordkernel as compiled_backend
except ImportError:
    compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = "cython" if compiled_backend is not None else "python"

reduce_word = _active.reduce_word
substitute = _active.substitute
artin_images = _active.artin_images
