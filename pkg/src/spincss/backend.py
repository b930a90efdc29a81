"""Selects the enumeration kernels behind the package.

Set SPINCSS_BACKEND to "numba" or "numpy" to force a backend; "auto" (or
unset) prefers the compiled kernels and silently falls back to pure numpy
when numba is not importable.  The choice is made once at import time.
"""

from __future__ import annotations

import os

_choice = os.environ.get("SPINCSS_BACKEND", "auto").strip().lower() or "auto"

if _choice in ("auto", "numba"):
    try:
        from . import _kernels_numba as _kernels

        BACKEND_NAME = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as _kernels

        BACKEND_NAME = "numpy"
elif _choice == "numpy":
    from . import _kernels_numpy as _kernels

    BACKEND_NAME = "numpy"
else:
    raise ValueError(
        f"SPINCSS_BACKEND must be 'numba', 'numpy', or 'auto', got {_choice!r}"
    )

partition_partials = _kernels.partition_partials
partition_max_exponent = _kernels.partition_max_exponent
span_exp_partials = _kernels.span_exp_partials
span_max_exponent = _kernels.span_max_exponent
weight_tally = _kernels.weight_tally
