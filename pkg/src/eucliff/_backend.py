"""Kernel backend selection, fixed once at import time.

The compiled extension is preferred when present; the numpy fallback is
used otherwise.  Setting the environment variable ``EUCLIFF_PURE`` to a
nonempty value other than ``0`` forces the fallback.  Both backends are
bitwise-identical, so the choice affects speed only.
"""

from __future__ import annotations

import os

if os.environ.get("EUCLIFF_PURE", "").strip() not in ("", "0"):
    from . import _kernels as active
else:
    try:
        from . import _speedups as active  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels as active  # type: ignore[no-redef]

#: Name of the backend in use: "compiled" or "numpy".
BACKEND = active.BACKEND_NAME

wedge_into = active.wedge_into
gp_orthonormal_into = active.gp_orthonormal_into
gp_table_into = active.gp_table_into
build_table = active.build_table
blade_column = active.blade_column
