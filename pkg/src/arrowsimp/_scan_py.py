"""Pure-Python subset-scan kernel for the exact solver.

Reference implementation of the hot loop; `_scan.pyx` is the compiled
twin with identical semantics (same enumeration order, same counters),
selected at import by :mod:`arrowsimp.modsimp` when available.

A candidate module C is scored by the minimal decomposability-graph
size sum(min(|f(x) & C|, |v(x) & C|) for outside x).  Candidates of one
cardinality are visited in lexicographic order of their ascending
member tuples, so the first strict improvement is automatically the
tie-break winner (smallest size first, then lexicographically smallest
set).
"""

from __future__ import annotations

from itertools import combinations

NAME = "python"


def scan_class(n, out_rows, in_rows, size, cutoff, lead=-1, prune=True):
    """Scan all size-``size`` subsets (optionally only those whose minimum
    element is ``lead``) for a cost strictly below ``cutoff``.

    Returns ``(best_cost, best_mask, examined)`` where ``best_mask`` is 0
    if nothing beat the cutoff.  With ``prune`` the per-candidate cost
    accumulation stops as soon as it reaches the running best; every
    candidate is still visited, so ``examined`` is independent of
    pruning.
    """
    best = cutoff
    best_mask = 0
    examined = 0
    if lead < 0:
        pool = combinations(range(n), size)
    else:
        pool = (
            (lead,) + rest for rest in combinations(range(lead + 1, n), size - 1)
        )
    for members in pool:
        examined += 1
        mask = 0
        for v in members:
            mask |= 1 << v
        cost = 0
        abandoned = False
        for x in range(n):
            if mask >> x & 1:
                continue
            fc = (in_rows[x] & mask).bit_count()
            vc = (out_rows[x] & mask).bit_count()
            cost += fc if fc < vc else vc
            if prune and cost >= best:
                abandoned = True
                break
        if not abandoned and cost < best:
            best = cost
            best_mask = mask
    return best, best_mask, examined
