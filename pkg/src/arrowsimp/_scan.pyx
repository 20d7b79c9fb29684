# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled subset-scan kernel.

Semantics are identical to `_scan_py.scan_class` (same lexicographic
enumeration order, same pruning rules, same counters); only the loop is
compiled.  Kept in bit-for-bit lockstep so the two backends can be
cross-checked in tests and benchmarked against each other.
"""

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define ASIMP_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int ASIMP_POPCOUNT64(unsigned long long v) {
        int c = 0;
        while (v) { v &= v - 1; c++; }
        return c;
    }
    #endif
    """
    int ASIMP_POPCOUNT64(unsigned long long x) nogil

NAME = "native"


def scan_class(int n, object out_rows, object in_rows, int size,
               int cutoff, int lead=-1, bint prune=True):
    """Scan all size-``size`` subsets (optionally only those whose minimum
    element is ``lead``) for a cost strictly below ``cutoff``.

    Returns ``(best_cost, best_mask, examined)``; ``best_mask`` is 0 if
    nothing beat the cutoff.
    """
    cdef unsigned long long outs[64]
    cdef unsigned long long ins[64]
    cdef int idx[64]
    cdef unsigned long long mask, best_mask = 0
    cdef long long examined = 0
    cdef int best = cutoff
    cdef int i, j, x, fc, vc, cost, first
    cdef bint abandoned

    if n < 1 or n > 64:
        raise ValueError("kernel supports 1 <= n <= 64")
    if size < 1 or size > n or (lead >= 0 and lead > n - size):
        return cutoff, 0, 0
    for i in range(n):
        outs[i] = out_rows[i]
        ins[i] = in_rows[i]

    if lead < 0:
        first = 0
        for i in range(size):
            idx[i] = i
    else:
        first = 1
        idx[0] = lead
        for i in range(1, size):
            idx[i] = lead + i

    while True:
        examined += 1
        mask = 0
        for i in range(size):
            mask |= (<unsigned long long>1) << idx[i]
        cost = 0
        abandoned = False
        for x in range(n):
            if (mask >> x) & 1:
                continue
            fc = ASIMP_POPCOUNT64(ins[x] & mask)
            vc = ASIMP_POPCOUNT64(outs[x] & mask)
            cost += fc if fc < vc else vc
            if prune and cost >= best:
                abandoned = True
                break
        if (not abandoned) and cost < best:
            best = cost
            best_mask = mask

        # next combination in lexicographic order; positions < first stay fixed
        i = size - 1
        while i >= first and idx[i] == n - size + i:
            i -= 1
        if i < first:
            break
        idx[i] += 1
        for j in range(i + 1, size):
            idx[j] = idx[j - 1] + 1

    return best, int(best_mask), examined
