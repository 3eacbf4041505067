"""Backend selection for the window-scan kernel.

The compiled Cython kernel is preferred; the numpy fallback is selected
when the extension is missing or when the ASPHERE_PURE environment
variable is set (useful for the benchmark and for parity tests).
"""

import os

if os.environ.get("ASPHERE_PURE"):
    from ._scan_py import scan_members

    BACKEND = "python"
else:
    try:
        from ._scan import scan_members

        BACKEND = "compiled"
    except ImportError:
        from ._scan_py import scan_members

        BACKEND = "python"

__all__ = ["scan_members", "BACKEND"]
