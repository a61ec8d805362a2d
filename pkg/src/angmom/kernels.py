"""Backend selection for the grid-evaluation kernel.

The compiled extension is preferred when it imported cleanly; otherwise the
numpy implementation is used. Set ANGMOM_KERNEL=python (or =ext) to force a
backend; forcing ext without the built extension is an error.
"""

from __future__ import annotations

import os

from . import _gridkernel_py

try:
    from . import _gridkernel
except ImportError:
    _gridkernel = None

_requested = os.environ.get("ANGMOM_KERNEL", "").strip().lower()
if _requested == "python":
    BACKEND = "python"
elif _requested == "ext":
    if _gridkernel is None:
        raise ImportError(
            "ANGMOM_KERNEL=ext but the compiled kernel is not built; "
            "run `pip install -e . --no-build-isolation` or drop the override"
        )
    BACKEND = "ext"
elif _requested:
    raise ImportError(f"ANGMOM_KERNEL must be 'python' or 'ext', got {_requested!r}")
else:
    BACKEND = "python" if _gridkernel is None else "ext"

grid_amplitudes = (
    _gridkernel_py.grid_amplitudes if BACKEND == "python" else _gridkernel.grid_amplitudes
)
