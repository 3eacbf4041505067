# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled window-scan kernel for integral-subsystem membership.

For each finite root r the caller precomputes a residue a[r] so that the
root shifted by k copies of the imaginary root is a member exactly when
(a[r] + k*b) % mod == 0.  The scan over the k-window is the hot loop of
the certifier and the randomized sweeps; everything here is plain int64
arithmetic on values already reduced modulo ``mod``.
"""


def scan_members(long[::1] a, long b, long mod, long[::1] kmin, long kmax):
    """Return (root_index, k) pairs hitting the congruence, row-major."""
    cdef Py_ssize_t r
    cdef long k
    out = []
    for r in range(a.shape[0]):
        for k in range(kmin[r], kmax):
            if (a[r] + k * b) % mod == 0:
                out.append((r, k))
    return out
