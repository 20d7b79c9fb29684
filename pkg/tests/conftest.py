"""Shared fixtures and naive reference implementations.

The naive helpers work on explicit Python sets built from the boolean
matrix, deliberately sharing no code with the bit-packed paths they
check.
"""

from itertools import combinations

import pytest

from arrowsimp import (
    Tournament,
    from_out_rows,
    paley_tournament,
    random_tournament,
)


def transitive(n: int) -> Tournament:
    rows = [sum(1 << j for j in range(i + 1, n)) for i in range(n)]
    return from_out_rows(n, rows)


@pytest.fixture(scope="session")
def c3():
    return paley_tournament(3)


@pytest.fixture(scope="session")
def t3():
    return transitive(3)


@pytest.fixture(scope="session")
def paley7():
    return paley_tournament(7)


@pytest.fixture(scope="session")
def paley11():
    return paley_tournament(11)


def random_pool(count, orders, seed0=1000):
    """Deterministic list of (label, tournament) across the given orders."""
    out = []
    for i in range(count):
        n = orders[i % len(orders)]
        seed = seed0 + i
        out.append((f"n={n} seed={seed}", random_tournament(n, seed)))
    return out


# --- naive reference implementations -------------------------------------------

def naive_out_set(t, x):
    m = t.matrix()
    return {y for y in range(t.n) if m[x][y]}


def naive_in_set(t, x):
    m = t.matrix()
    return {y for y in range(t.n) if m[y][x]}


def naive_pair_counts(t, x, y):
    """(out_pair, in_pair, out_in, in_out) from explicit sets."""
    vx, fx = naive_out_set(t, x), naive_in_set(t, x)
    vy, fy = naive_out_set(t, y), naive_in_set(t, y)
    return (len(vx & vy), len(fx & fy), len(vx & fy), len(fx & vy))


def naive_is_module(t, members):
    ms = set(members)
    for x in range(t.n):
        if x in ms:
            continue
        beats = {y for y in ms if t.beats(x, y)}
        if beats and beats != ms:
            return False
    return True


def naive_module_cost(t, members):
    """min(|f(x) & C|, |v(x) & C|) summed over outside vertices, via sets."""
    ms = set(members)
    cost = 0
    for x in range(t.n):
        if x in ms:
            continue
        cost += min(len(naive_in_set(t, x) & ms), len(naive_out_set(t, x) & ms))
    return cost


def naive_exact_search(t):
    """(s, witness_members) by full enumeration with the tie-break order:
    increasing size, lexicographic within a size, first strict winner.
    """
    best = None
    for size in range(2, t.n):
        for members in combinations(range(t.n), size):
            cost = naive_module_cost(t, members)
            if best is None or cost < best[0]:
                best = (cost, members)
    return best
