"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DUALTOEPLITZ_BACKEND=python or =compiled to force one side; the default
prefers the compiled module and silently falls back.  Both kernels produce
bit-identical results (see tests/test_backend_parity.py), so the choice only
affects speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("DUALTOEPLITZ_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _core_py as kernel
elif _requested == "compiled":
    from . import _core as kernel  # type: ignore[attr-defined]
elif _requested == "":
    try:
        from . import _core as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as kernel
else:
    raise ImportError(
        "DUALTOEPLITZ_BACKEND must be 'python' or 'compiled', got %r" % _requested
    )

BACKEND_NAME: str = kernel.BACKEND
