"""Generators and recognizers for the extremal tournament families.

Covers the quadratic-residue (Paley) construction, seeded random and
exhaustively enumerated tournaments, double-regularity recognition with
its per-arc intersection profile, the degree split of near-regular
tournaments with the separator conditions that characterize deleted
vertices, the one-vertex extension recovering a doubly regular
tournament, and the bridge to skew +-1 matrices.

Conventions fixed here (the literature admits mirror-image choices, one
is pinned for reproducible fixtures):

* residue rule: x beats y iff (y - x) mod q is a nonzero square;
* skew matrix normal form: border index 0, diagonal +1, border row +1,
  border column -1, core entry (i, j) = +1 iff vertex i-1 beats j-1;
* random orientation: pair t (in lexicographic pair order) takes the
  low bit of the t-th splitmix64 output.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .core import (
    NEAR_REGULAR,
    REGULAR,
    Tournament,
    bits,
    from_out_rows,
    pair_stats,
    regularity_class,
)
from .errors import (
    ConditionsViolatedError,
    InvariantViolationError,
    NotDoublyRegularError,
    NotNearRegularError,
    NotNormalizedError,
    NotPrimeError,
    PartitionMismatchError,
    TooSmallError,
    WrongOrderError,
    WrongResidueClassError,
)


# --- generators --------------------------------------------------------------

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    for d in range(3, isqrt(q) + 1, 2):
        if q % d == 0:
            return False
    return True


def paley_tournament(q: int) -> Tournament:
    """Quadratic-residue tournament on 0..q-1 for a prime q = 3 mod 4.

    x beats y iff (y - x) mod q is a nonzero square.  The residue class
    condition makes -1 a non-square, so exactly one of (y - x), (x - y)
    is a square and the relation is a tournament; the result is regular
    of out-degree (q-1)/2 and doubly regular with k = (q-3)/4.
    """
    if not _is_prime(q):
        raise NotPrimeError(f"{q} is not prime")
    if q % 4 != 3:
        raise WrongResidueClassError(
            f"{q} = {q % 4} mod 4; need 3 mod 4 so that -1 is a non-square")
    squares = {pow(i, 2, q) for i in range(1, q)}
    rows = [0] * q
    for x in range(q):
        row = 0
        for r in squares:
            row |= 1 << ((x + r) % q)
        rows[x] = row
    return from_out_rows(q, rows)


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (next_state, 64-bit output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniform random orientation of each pair, bit-identical for a
    given (n, seed) on every platform.

    The generator is splitmix64 seeded with ``seed`` (reduced mod 2^64);
    pairs (i, j), i < j, are taken in lexicographic order and i beats j
    iff the low bit of the pair's draw is set.
    """
    if n < 1:
        raise TooSmallError(f"need n >= 1, got n={n}")
    state = seed & _MASK64
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            state, draw = _splitmix64(state)
            if draw & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return from_out_rows(n, rows)


def tournament_from_bits(n: int, index: int) -> Tournament:
    """The labeled tournament whose pair orientations are the bits of
    ``index``: bit t (least significant first) orients the t-th pair
    (i, j) in lexicographic order as i beats j when set.
    """
    rows = [0] * n
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            if index >> t & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            t += 1
    return from_out_rows(n, rows)


def all_tournaments(n: int):
    """All 2^(n(n-1)/2) labeled n-tournaments, in index order."""
    for index in range(1 << (n * (n - 1) // 2)):
        yield tournament_from_bits(n, index)


# --- double regularity -------------------------------------------------------

def is_doubly_regular(t: Tournament) -> int | None:
    """k if every pair jointly beats exactly k vertices, else None."""
    if t.n < 3:
        raise TooSmallError(f"double regularity needs n >= 3, got n={t.n}")
    k = None
    for x in range(t.n):
        for y in range(x + 1, t.n):
            common = (t.out_rows[x] & t.out_rows[y]).bit_count()
            if k is None:
                k = common
            elif common != k:
                return None
    if t.n != 4 * k + 3:
        raise InvariantViolationError(
            f"constant pair out-degree {k} on n={t.n}, expected n=4k+3")
    return k


def doubly_regular_profile_holds(t: Tournament) -> bool:
    """Check the full per-arc intersection profile of a doubly regular
    tournament: regularity, and (k, k, k, k+1) for the four sets
    (v&v, f&f, v&f, f&v) along every arc x beats y.
    """
    k = is_doubly_regular(t)
    if k is None:
        raise NotDoublyRegularError("pair out-degrees are not constant")
    if regularity_class(t).kind != REGULAR:
        return False
    for x, y in t.arcs():
        st = pair_stats(t, x, y)
        if (st.out_pair, st.in_pair, st.out_in, st.in_out) != (k, k, k, k + 1):
            return False
    return True


# --- near-regular split and the deleted-vertex characterization --------------

@dataclass(frozen=True)
class NearRegularPartition:
    """Degree split of a near-regular tournament on 4k+2 vertices:
    ``low`` holds the 2k+1 vertices of out-degree 2k, ``high`` the 2k+1
    of out-degree 2k+1.
    """

    low: tuple[int, ...]
    high: tuple[int, ...]
    k: int


def near_regular_partition(t: Tournament) -> NearRegularPartition:
    """The (low, high, k) split; requires n = 4k+2 and near-regularity."""
    if t.n % 4 != 2:
        raise WrongOrderError(f"need n = 2 mod 4, got n={t.n}")
    reg = regularity_class(t)
    if reg.kind != NEAR_REGULAR:
        raise NotNearRegularError(f"tournament is {reg.kind}")
    return NearRegularPartition(reg.low_class, reg.high_class, (t.n - 2) // 4)


def _check_partition(t: Tournament, part: NearRegularPartition) -> None:
    if t.n != 4 * part.k + 2:
        raise PartitionMismatchError(f"partition k={part.k} does not fit n={t.n}")
    reg = regularity_class(t)
    if reg.kind != NEAR_REGULAR:
        raise PartitionMismatchError(f"tournament is {reg.kind}, not near-regular")
    if part.low != reg.low_class or part.high != reg.high_class:
        raise PartitionMismatchError("partition classes disagree with out-degrees")


def separator_conditions_hold(t: Tournament, part: NearRegularPartition) -> bool:
    """The pair-separator pattern of a vertex-deleted doubly regular
    tournament: same-class pairs have 2k+1 separators, cross-class
    pairs have 2k.
    """
    _check_partition(t, part)
    k = part.k
    high = set(part.high)
    for x in range(t.n):
        for y in range(x + 1, t.n):
            want = 2 * k + 1 if (x in high) == (y in high) else 2 * k
            if pair_stats(t, x, y).separators != want:
                return False
    return True


def arc_class_profile_holds(t: Tournament, part: NearRegularPartition) -> bool:
    """The four per-arc intersection cases implied by the separator
    conditions.  For an arc x beats y the pair (|f(x)&v(y)|, |v(x)&f(y)|)
    must be: high->high (k+1, k); low->low (k+1, k); high->low (k, k);
    low->high (k+1, k-1).
    """
    _check_partition(t, part)
    if not separator_conditions_hold(t, part):
        raise ConditionsViolatedError("separator conditions fail")
    k = part.k
    high = set(part.high)
    cases = {
        (True, True): (k + 1, k),
        (False, False): (k + 1, k),
        (True, False): (k, k),
        (False, True): (k + 1, k - 1),
    }
    for x, y in t.arcs():
        st = pair_stats(t, x, y)
        if (st.in_out, st.out_in) != cases[(x in high, y in high)]:
            return False
    return True


def extend_to_doubly_regular(t: Tournament, part: NearRegularPartition) -> Tournament:
    """Add one vertex that beats the high class and loses to the low
    class.  When the separator conditions hold the result is doubly
    regular with the same k; anything less is refused rather than
    returned unverified.
    """
    _check_partition(t, part)
    if not separator_conditions_hold(t, part):
        raise ConditionsViolatedError("separator conditions fail; extension refused")
    w = t.n
    rows = list(t.out_rows)
    for v in part.low:
        rows[v] |= 1 << w
    high_mask = 0
    for v in part.high:
        high_mask |= 1 << v
    rows.append(high_mask)
    extended = from_out_rows(t.n + 1, rows)
    if is_doubly_regular(extended) != part.k:
        raise InvariantViolationError("extension is not doubly regular")
    for z in range(t.n):
        if pair_stats(extended, w, z).separators != 2 * part.k + 1:
            raise InvariantViolationError("new vertex has a bad separator count")
    return extended


# --- skew matrix bridge ------------------------------------------------------

@dataclass(frozen=True)
class SkewHadamard:
    """A +-1 matrix H of order m with H + H^T = 2I and H H^T = mI."""

    order: int
    entries: tuple[tuple[int, ...], ...]


def skew_hadamard(entries) -> SkewHadamard:
    """Validate both matrix invariants and freeze the entries."""
    rows = tuple(tuple(int(v) for v in row) for row in entries)
    m = len(rows)
    if m < 1 or any(len(r) != m for r in rows):
        raise InvariantViolationError("matrix is not square")
    if any(v not in (-1, 1) for r in rows for v in r):
        raise InvariantViolationError("entries must be +1 or -1")
    h = np.array(rows, dtype=np.int64)
    if not np.array_equal(h + h.T, 2 * np.eye(m, dtype=np.int64)):
        raise InvariantViolationError("H + H^T != 2I")
    if not np.array_equal(h @ h.T, m * np.eye(m, dtype=np.int64)):
        raise InvariantViolationError("H H^T != mI")
    return SkewHadamard(m, rows)


def to_skew_hadamard(t: Tournament) -> SkewHadamard:
    """Border a doubly regular tournament into a skew matrix of order n+1."""
    k = is_doubly_regular(t)
    if k is None:
        raise NotDoublyRegularError("input tournament is not doubly regular")
    m = t.n + 1
    rows = [[1] * m]
    for i in range(t.n):
        row = [-1]
        for j in range(t.n):
            row.append(1 if i == j or t.beats(i, j) else -1)
        rows.append(row)
    return skew_hadamard(rows)


def from_skew_hadamard(h: SkewHadamard) -> Tournament:
    """Read the tournament back out of a border-normalized skew matrix."""
    m = h.order
    if m < 4 or m % 4 != 0:
        raise InvariantViolationError(f"order {m} is not a positive multiple of 4")
    if any(v != 1 for v in h.entries[0]):
        raise NotNormalizedError("row 0 must be all +1")
    if any(h.entries[i][0] != -1 for i in range(1, m)):
        raise NotNormalizedError("column 0 must be -1 below the border")
    n = m - 1
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and h.entries[i + 1][j + 1] == 1:
                rows[i] |= 1 << j
    t = from_out_rows(n, rows)
    if is_doubly_regular(t) != m // 4 - 1:
        raise InvariantViolationError("core block is not doubly regular")
    return t
