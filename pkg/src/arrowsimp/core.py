"""Tournament data model on bit-packed adjacency rows.

A tournament on n labeled vertices is stored as one Python int per
vertex: bit j of ``out_rows[i]`` is set iff i beats j.  Every
neighbourhood computation (degrees, pair statistics, module tests) is
then a row AND plus a popcount, which is what keeps the exact subset
search affordable.  For n <= 24 each row fits a single machine word, so
the same representation feeds the compiled scan kernel unchanged.

Vertices are always the contiguous labels 0..n-1; deleting vertices
relabels the survivors in ascending order.  Tournaments are immutable
after construction and safe to share across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ArcAbsentError,
    DeletesEverythingError,
    DiagonalSetError,
    NotAntisymmetricError,
    NotSquareError,
    SameVertexError,
    TooSmallError,
    VertexOutOfRangeError,
)

REGULAR = "regular"
NEAR_REGULAR = "near-regular"
NEITHER = "neither"


def bits(mask: int) -> tuple[int, ...]:
    """Ascending vertex labels of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_from(members, n: int) -> int:
    """Bitmask of an iterable of vertex labels; validates range."""
    mask = 0
    for v in members:
        if not 0 <= v < n:
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{n - 1}")
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Tournament:
    """Immutable tournament; build via :func:`from_matrix` or the generators.

    ``out_rows[i]`` has bit j set iff i beats j.  The factories validate
    irreflexivity and completeness/antisymmetry; constructing directly
    skips validation.
    """

    n: int
    out_rows: tuple[int, ...]

    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.out_rows):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        return tuple(cols)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def beats(self, x: int, y: int) -> bool:
        return bool(self.out_rows[x] >> y & 1)

    def arcs(self):
        """All arcs (x, y) with x beats y, in lexicographic pair order."""
        for x in range(self.n):
            for y in range(x + 1, self.n):
                yield (x, y) if self.beats(x, y) else (y, x)

    def matrix(self) -> list[list[bool]]:
        return [[bool(row >> j & 1) for j in range(self.n)] for row in self.out_rows]


@dataclass(frozen=True)
class PairStats:
    """The five intersection counts for an ordered vertex pair (x, y).

    ``out_pair``  = |v(x) & v(y)|   vertices both beat
    ``in_pair``   = |f(x) & f(y)|   vertices beating both
    ``out_in``    = |v(x) & f(y)|   beaten by x, beating y
    ``in_out``    = |f(x) & v(y)|   beating x, beaten by y
    ``separators``= out_in + in_out

    The four intersection sizes partition the other n-2 vertices, so
    ``separators + in_pair + out_pair == n - 2`` always holds.
    """

    out_pair: int
    in_pair: int
    out_in: int
    in_out: int
    separators: int


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees plus the global minima the bounds live on."""

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    min_out: int
    min_in: int
    min_degree: int       # min over vertices of min(out, in)
    min_separators: int   # min over pairs of the separator count


@dataclass(frozen=True)
class Regularity:
    """Outcome of the regular / near-regular / neither trichotomy.

    For the near-regular case the two degree classes are returned:
    ``low_class`` holds the vertices of out-degree (n-2)/2 and
    ``high_class`` those of out-degree n/2, each of size n/2.
    """

    kind: str
    low_class: tuple[int, ...] | None = None
    high_class: tuple[int, ...] | None = None


def from_matrix(rows) -> Tournament:
    """Validate a boolean dominance matrix and pack it.

    Rejects non-square input, set diagonal entries, and any pair with
    both or neither orientation present (first offending pair reported).
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    if n < 1:
        raise NotSquareError("matrix is empty")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NotSquareError(f"row {i} has length {len(r)}, expected {n}")
    packed = []
    for i, r in enumerate(rows):
        row = 0
        for j, entry in enumerate(r):
            if entry:
                row |= 1 << j
        packed.append(row)
    return from_out_rows(n, packed)


def from_out_rows(n: int, out_rows) -> Tournament:
    """Pack pre-built adjacency rows, running the same validation."""
    out_rows = tuple(out_rows)
    if len(out_rows) != n:
        raise NotSquareError(f"{len(out_rows)} rows for n={n}")
    full = (1 << n) - 1
    for i, row in enumerate(out_rows):
        if row >> i & 1:
            raise DiagonalSetError(f"diagonal entry ({i},{i}) is set")
        if row & ~full:
            raise NotSquareError(f"row {i} has bits beyond column {n - 1}")
    for i in range(n):
        for j in range(i + 1, n):
            ij = out_rows[i] >> j & 1
            ji = out_rows[j] >> i & 1
            if ij and ji:
                raise NotAntisymmetricError(f"both ({i},{j}) and ({j},{i}) present")
            if not ij and not ji:
                raise NotAntisymmetricError(f"neither ({i},{j}) nor ({j},{i}) present")
    return Tournament(n, out_rows)


def _check_vertex(t: Tournament, x: int) -> None:
    if not 0 <= x < t.n:
        raise VertexOutOfRangeError(f"vertex {x} not in 0..{t.n - 1}")


def neighborhoods(t: Tournament, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(out-neighbours, in-neighbours) of x; disjoint, union is V \\ {x}."""
    _check_vertex(t, x)
    return bits(t.out_rows[x]), bits(t.in_rows[x])


def pair_stats(t: Tournament, x: int, y: int) -> PairStats:
    """Intersection counts for the ordered pair (x, y) by row AND + popcount."""
    _check_vertex(t, x)
    _check_vertex(t, y)
    if x == y:
        raise SameVertexError(f"pair needs two distinct vertices, got {x} twice")
    vx, fx = t.out_rows[x], t.in_rows[x]
    vy, fy = t.out_rows[y], t.in_rows[y]
    out_pair = (vx & vy).bit_count()
    in_pair = (fx & fy).bit_count()
    out_in = (vx & fy).bit_count()
    in_out = (fx & vy).bit_count()
    return PairStats(out_pair, in_pair, out_in, in_out, out_in + in_out)


def global_minima(t: Tournament) -> DegreeProfile:
    """Exact degree minima plus the minimum separator count over all pairs."""
    if t.n < 3:
        raise TooSmallError(f"degree/separator minima need n >= 3, got n={t.n}")
    outs = tuple(r.bit_count() for r in t.out_rows)
    ins = tuple(r.bit_count() for r in t.in_rows)
    min_out = min(outs)
    min_in = min(ins)
    sep_min = t.n
    for x in range(t.n):
        vx, fx = t.out_rows[x], t.in_rows[x]
        for y in range(x + 1, t.n):
            sep = (vx & t.in_rows[y]).bit_count() + (fx & t.out_rows[y]).bit_count()
            if sep < sep_min:
                sep_min = sep
    return DegreeProfile(outs, ins, min_out, min_in,
                         min(min_out, min_in), sep_min)


def reverse_arcs(t: Tournament, arc_set) -> Tournament:
    """Reverse every arc in ``arc_set``; each must be present as stated.

    Applying the operation again with every pair flipped restores the
    original tournament.
    """
    arcs = set()
    for x, y in arc_set:
        _check_vertex(t, x)
        _check_vertex(t, y)
        if not t.beats(x, y):
            raise ArcAbsentError(f"({x},{y}) is not an arc; orientation is ({y},{x})"
                                 if x != y else f"({x},{x}) is a loop, not an arc")
        arcs.add((x, y))
    rows = list(t.out_rows)
    for x, y in arcs:
        rows[x] &= ~(1 << y)
        rows[y] |= 1 << x
    return Tournament(t.n, tuple(rows))


def delete_vertices(t: Tournament, vertices) -> Tournament:
    """Subtournament on the survivors, relabeled 0.. in ascending label order."""
    drop = mask_from(vertices, t.n)
    if drop == t.full_mask:
        raise DeletesEverythingError("cannot delete every vertex")
    keep = [v for v in range(t.n) if not drop >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = t.out_rows[v] & ~drop
        packed = 0
        while row:
            low = row & -row
            packed |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows[pos[v]] = packed
    return Tournament(len(keep), tuple(rows))


def regularity_class(t: Tournament) -> Regularity:
    """Classify as regular, near-regular (with the degree split), or neither."""
    if t.n < 2:
        raise TooSmallError(f"regularity needs n >= 2, got n={t.n}")
    outs = [r.bit_count() for r in t.out_rows]
    if t.n % 2 == 1 and all(d == (t.n - 1) // 2 for d in outs):
        return Regularity(REGULAR)
    if t.n % 2 == 0:
        low = tuple(v for v, d in enumerate(outs) if d == (t.n - 2) // 2)
        high = tuple(v for v, d in enumerate(outs) if d == t.n // 2)
        if len(low) == t.n // 2 and len(high) == t.n // 2:
            return Regularity(NEAR_REGULAR, low, high)
    return Regularity(NEITHER)
