"""Backend selection for the hot kernels.

Imports the compiled Cython module when it is available, otherwise the
pure-Python fallback with the identical API.  Setting FINITOP_PURE=1 in
the environment forces the fallback even when the extension is built
(used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("FINITOP_PURE"):
    from finitop import _fallback as _backend
else:
    try:
        from finitop import _core as _backend  # type: ignore[attr-defined]
    except ImportError:
        from finitop import _fallback as _backend

BACKEND = _backend.BACKEND
preorders = _backend.preorders
automorphisms = _backend.automorphisms
star_condition = _backend.star_condition
quotient_condition = _backend.quotient_condition
