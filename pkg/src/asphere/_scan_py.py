"""Pure-Python fallback for the window-scan kernel.

Mirrors asphere._scan exactly; used when the compiled extension is not
built (or when ASPHERE_PURE is set).  Vectorized with numpy so the
fallback stays usable in the randomized sweeps.
"""

import numpy as np


def scan_members(a, b, mod, kmin, kmax):
    """Return (root_index, k) pairs hitting the congruence, row-major."""
    a = np.asarray(a, dtype=np.int64)
    kmin = np.asarray(kmin, dtype=np.int64)
    ks = np.arange(kmax, dtype=np.int64)
    hit = (a[:, None] + ks[None, :] * b) % mod == 0
    hit &= ks[None, :] >= kmin[:, None]
    rows, cols = np.nonzero(hit)
    return [(int(r), int(k)) for r, k in zip(rows, cols)]
