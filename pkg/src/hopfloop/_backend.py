"""Selects the loop-search kernel at import time.

The compiled extension is preferred; the pure-Python twin is the fallback.
Set HOPFLOOP_PURE=1 to force the fallback (used by the benchmark and to
debug kernel discrepancies).
"""

import os

if os.environ.get("HOPFLOOP_PURE"):
    from . import _ipsearch_py as _kernel

    BACKEND = "python"
else:
    try:
        from . import _ipsearch as _kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _ipsearch_py as _kernel

        BACKEND = "python"

enumerate_ip_tables = _kernel.enumerate_ip_tables
canonical_form = _kernel.canonical_form
