"""Modules, simplicity testing, and the exact arrow-simplicity solver.

Arrow-simplicity here is the minimum number of arc reversals that
produce a tournament with a nontrivial module; an input that already
has one scores 0.  The solver rests on the cost identity for a fixed
candidate set C: the cheapest way to make C a module is to rewire each
outside vertex x toward the smaller of its two neighbour sets inside C,
so

    cost(C) = sum over x outside C of min(|f(x) & C|, |v(x) & C|)

and the exact answer is the minimum of cost(C) over 2 <= |C| <= n-1.
Candidates are enumerated by increasing cardinality, lexicographically
within a cardinality, with two admissible prunes: a whole size class is
skipped when its degree/separator lower bound already meets the
incumbent, and a candidate's cost accumulation stops once it reaches
the incumbent.  The scan loop itself lives in a compiled kernel
(`_scan.pyx`) with a pure-Python twin (`_scan_py`); whichever is
available is selected at import.

Witness tie-breaks are deterministic: smallest candidate size, then
lexicographically smallest member tuple, with ties between the two
rewiring sides of an outside vertex resolved toward its in-neighbours.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import _scan_py
from .core import (
    DegreeProfile,
    Tournament,
    bits,
    global_minima,
    mask_from,
    reverse_arcs,
)
from .errors import (
    BadSizeError,
    InvariantViolationError,
    SameVertexError,
    TooLargeError,
    TooSmallError,
)

try:
    from . import _scan as _scan_native
except ImportError:
    _scan_native = None

EXACT_CAP = 24          # exact search enumerates 2^n subsets; beyond this use bounds
ORACLE_CAP = 5          # brute force enumerates 2^(n(n-1)/2) arc sets
_STRIPE_MIN = 4096      # smallest size class worth fanning out to workers


def default_backend() -> str:
    return "native" if _scan_native is not None else "python"


def _kernel(backend):
    if backend is None or backend == "auto":
        return _scan_native if _scan_native is not None else _scan_py
    if backend == "native":
        if _scan_native is None:
            raise ValueError("compiled scan kernel is not built; use backend='python'")
        return _scan_native
    if backend == "python":
        return _scan_py
    raise ValueError(f"unknown backend {backend!r}")


# --- modules and simplicity --------------------------------------------------

def _is_module_mask(t: Tournament, mask: int) -> bool:
    for x in range(t.n):
        if mask >> x & 1:
            continue
        if t.out_rows[x] & mask and t.in_rows[x] & mask:
            return False
    return True


def is_module(t: Tournament, members) -> bool:
    """True iff every outside vertex beats all of C or loses to all of C.

    Trivially true for |C| <= 1 and C = V.
    """
    return _is_module_mask(t, mask_from(members, t.n))


def _closure_mask(t: Tournament, mask: int) -> int:
    out, inr = t.out_rows, t.in_rows
    grew = True
    while grew:
        grew = False
        for z in range(t.n):
            if mask >> z & 1:
                continue
            if out[z] & mask and inr[z] & mask:
                mask |= 1 << z
                grew = True
    return mask


def minimal_module_closure(t: Tournament, x: int, y: int) -> tuple[int, ...]:
    """Smallest module containing {x, y}.

    Grows {x, y} by absorbing any outside vertex that both beats and
    loses inside the current set; the fixpoint is a module and is
    contained in every module containing the pair.
    """
    if x == y:
        raise SameVertexError(f"closure needs two distinct vertices, got {x} twice")
    m = mask_from((x, y), t.n)
    return bits(_closure_mask(t, m))


def is_simple(t: Tournament) -> bool:
    """True iff the only modules are the trivial ones.

    Checks that every pair's minimal module closure is the full vertex
    set; any nontrivial module contains some pair, and that pair's
    closure is then a proper subset.
    """
    if t.n < 3:
        raise TooSmallError(f"simplicity needs n >= 3, got n={t.n}")
    full = t.full_mask
    for x in range(t.n):
        for y in range(x + 1, t.n):
            if _closure_mask(t, (1 << x) | (1 << y)) != full:
                return False
    return True


def is_simple_exhaustive(t: Tournament) -> bool:
    """Subset-enumeration simplicity check, independent of the closure
    algorithm.  Exponential; meant as a cross-check oracle for tiny n.
    """
    if t.n < 3:
        raise TooSmallError(f"simplicity needs n >= 3, got n={t.n}")
    full = t.full_mask
    for mask in range(3, full):
        c = mask.bit_count()
        if 2 <= c <= t.n - 1 and _is_module_mask(t, mask):
            return False
    return True


def _first_nontrivial_module(t: Tournament) -> tuple[int, ...] | None:
    full = t.full_mask
    for x in range(t.n):
        for y in range(x + 1, t.n):
            closed = _closure_mask(t, (1 << x) | (1 << y))
            if closed != full:
                return bits(closed)
    return None


# --- candidate cost ----------------------------------------------------------

@dataclass(frozen=True)
class DecomposabilityGraph:
    """Minimal rewiring that turns the candidate set into a module.

    Bipartite between ``members`` (the candidate C) and the rest: each
    outside vertex x contributes edges to exactly one of its neighbour
    sets inside C, whichever is smaller.  ``attach_in`` lists the
    outside vertices wired to their in-neighbours in C (after reversal
    they beat all of C); ``attach_out`` those wired to their
    out-neighbours (after reversal C beats them).  Equal-size ties go
    to the in-neighbour side.
    """

    members: tuple[int, ...]
    attach_in: tuple[int, ...]
    attach_out: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def reversal_arcs(self, t: Tournament) -> tuple[tuple[int, int], ...]:
        """The edge set as arcs oriented as they stand in ``t``."""
        mask = mask_from(self.members, t.n)
        flip_in = set(self.attach_in)
        arcs = []
        for x in sorted(self.attach_in + self.attach_out):
            if x in flip_in:
                arcs.extend((y, x) for y in bits(t.in_rows[x] & mask))
            else:
                arcs.extend((x, y) for y in bits(t.out_rows[x] & mask))
        return tuple(arcs)


def module_cost(t: Tournament, members) -> tuple[int, DecomposabilityGraph]:
    """Minimum reversals making C a module, with the graph realizing it.

    The reversal is verified: applying the graph's arcs must actually
    leave C a module.
    """
    mask = mask_from(members, t.n)
    c = mask.bit_count()
    if not 2 <= c <= t.n - 1:
        raise BadSizeError(f"candidate size {c} outside 2..{t.n - 1}")
    cost = 0
    attach_in, attach_out, edges = [], [], []
    for x in range(t.n):
        if mask >> x & 1:
            continue
        fc = t.in_rows[x] & mask
        vc = t.out_rows[x] & mask
        nf, nv = fc.bit_count(), vc.bit_count()
        if nf <= nv:
            attach_in.append(x)
            chosen = fc
            cost += nf
        else:
            attach_out.append(x)
            chosen = vc
            cost += nv
        edges.extend((min(x, y), max(x, y)) for y in bits(chosen))
    graph = DecomposabilityGraph(bits(mask), tuple(attach_in), tuple(attach_out),
                                 tuple(edges))
    arcs = graph.reversal_arcs(t)
    if len(arcs) != cost or not _is_module_mask(reverse_arcs(t, arcs), mask):
        raise InvariantViolationError("rewiring failed to produce a module")
    return cost, graph


def cost_lower_bound(t: Tournament, size: int, profile: DegreeProfile) -> int:
    """Best admissible lower bound on the cost of any size-``size`` candidate.

    The degree bound applies when candidates are large (n - delta <=
    size), the separator bound when they are small (size <= Delta);
    otherwise nothing is claimed.
    """
    if not 2 <= size <= t.n - 1:
        raise BadSizeError(f"candidate size {size} outside 2..{t.n - 1}")
    bound = 0
    if t.n - profile.min_degree <= size:
        bound = profile.min_degree
    if size <= profile.min_separators:
        bound = max(bound, profile.min_separators)
    return bound


def congruence_bound(n: int) -> int:
    """Upper bound on arrow-simplicity from the order's residue mod 4."""
    if n < 3:
        raise TooSmallError(f"bound needs n >= 3, got n={n}")
    k, r = divmod(n, 4)
    return (2 * k - 2, 2 * k - 1, 2 * k, 2 * k + 1)[r]


# --- cheap constructive witnesses -------------------------------------------

def cheap_witnesses(t: Tournament):
    """Constructive reversal sets realizing the two cheap upper bounds.

    The vertex witness isolates the vertex of smallest one-sided degree
    (making the other n-1 vertices a module, delta arcs); the pair
    witness rewires all separators of the pair with fewest of them
    (making the pair a module, Delta arcs).  Both are verified.
    """
    if t.n < 3:
        raise TooSmallError(f"witnesses need n >= 3, got n={t.n}")
    x_best = min(range(t.n),
                 key=lambda v: (min(t.out_rows[v].bit_count(), t.in_rows[v].bit_count()), v))
    if t.out_rows[x_best].bit_count() <= t.in_rows[x_best].bit_count():
        v_arcs = tuple((x_best, y) for y in bits(t.out_rows[x_best]))
    else:
        v_arcs = tuple((y, x_best) for y in bits(t.in_rows[x_best]))
    rest = tuple(v for v in range(t.n) if v != x_best)
    if not is_module(reverse_arcs(t, v_arcs), rest):
        raise InvariantViolationError("vertex witness failed verification")

    pair_best = None
    sep_best = t.n
    for x in range(t.n):
        for y in range(x + 1, t.n):
            sep = ((t.out_rows[x] & t.in_rows[y]).bit_count()
                   + (t.in_rows[x] & t.out_rows[y]).bit_count())
            if sep < sep_best:
                sep_best, pair_best = sep, (x, y)
    x, y = pair_best
    p_arcs = tuple((x, z) for z in bits(t.out_rows[x] & t.in_rows[y]))
    p_arcs += tuple((z, x) for z in bits(t.in_rows[x] & t.out_rows[y]))
    if not is_module(reverse_arcs(t, p_arcs), (x, y)):
        raise InvariantViolationError("pair witness failed verification")
    return (x_best, v_arcs), ((x, y), p_arcs)


# --- the exact solver --------------------------------------------------------

@dataclass(frozen=True)
class SimplicityReport:
    """Exact arrow-simplicity with a certificate and search statistics.

    Reversing ``witness_arcs`` (exactly ``s`` of them) leaves
    ``witness_module`` a module.  ``subsets_examined`` counts every
    candidate individually visited; ``subsets_pruned`` counts those
    skipped wholesale by a size-class lower bound.  Both counters are
    independent of the worker count and of the kernel backend.
    """

    s: int
    witness_module: tuple[int, ...]
    witness_arcs: tuple[tuple[int, int], ...]
    min_degree: int
    min_separators: int
    congruence_bound: int
    subsets_examined: int
    subsets_pruned: int


def _scan_stripe(args):
    n, out_rows, in_rows, size, cutoff, lead, prune, backend = args
    return _kernel(backend).scan_class(n, out_rows, in_rows, size, cutoff, lead, prune)


def arrow_simplicity(t: Tournament, *, workers: int = 1, prune: bool = True,
                     backend: str | None = None) -> SimplicityReport:
    """Exact minimum number of reversals creating a nontrivial module.

    Non-simple inputs short-circuit to s=0 with a nontrivial module as
    witness and no arcs.  Otherwise candidate sets are scanned by
    increasing size; the returned witness is the first optimum in
    (size, lexicographic) order regardless of ``workers``, ``prune``,
    or ``backend``.
    """
    if t.n < 3:
        raise TooSmallError(f"arrow-simplicity needs n >= 3, got n={t.n}")
    if t.n > EXACT_CAP:
        raise TooLargeError(
            f"exact mode capped at n <= {EXACT_CAP}, got n={t.n}; "
            "use cheap_witnesses/congruence_bound instead")
    profile = global_minima(t)
    cb = congruence_bound(t.n)
    trivial_witness = _first_nontrivial_module(t)
    if trivial_witness is not None:
        return SimplicityReport(0, trivial_witness, (), profile.min_degree,
                                profile.min_separators, cb, 0, 0)

    n = t.n
    kern = _kernel(backend)
    incumbent = min(profile.min_degree, profile.min_separators) + 1
    witness_mask = 0
    examined = pruned = 0
    pool = None
    try:
        if workers > 1:
            pool = multiprocessing.get_context("fork").Pool(workers)
        for size in range(2, n):
            if prune and cost_lower_bound(t, size, profile) >= incumbent:
                pruned += comb(n, size)
                continue
            if pool is not None and comb(n, size) >= _STRIPE_MIN:
                tasks = [(n, t.out_rows, t.in_rows, size, incumbent, lead, prune, kern.NAME)
                         for lead in range(n - size + 1)]
                for cost, mask, ex in pool.map(_scan_stripe, tasks):
                    examined += ex
                    if cost < incumbent:
                        incumbent, witness_mask = cost, mask
            else:
                cost, mask, ex = kern.scan_class(n, t.out_rows, t.in_rows, size,
                                                 incumbent, -1, prune)
                examined += ex
                if cost < incumbent:
                    incumbent, witness_mask = cost, mask
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    if witness_mask == 0:
        raise InvariantViolationError("scan ended without a witness")
    members = bits(witness_mask)
    cost, graph = module_cost(t, members)
    arcs = graph.reversal_arcs(t)
    if cost != incumbent or len(arcs) != incumbent:
        raise InvariantViolationError("witness cost mismatch")
    return SimplicityReport(incumbent, members, arcs, profile.min_degree,
                            profile.min_separators, cb, examined, pruned)


# --- independent brute-force oracle ------------------------------------------

def arrow_simplicity_brute_force(t: Tournament) -> int:
    """Arrow-simplicity straight from the definition.

    Enumerates reversal sets by increasing size and returns the first
    size whose reversal leaves a nontrivial module, using the
    subset-enumeration module scan.  Shares nothing with the candidate
    cost reduction, so it certifies the solver on tiny instances.
    """
    if t.n < 3:
        raise TooSmallError(f"arrow-simplicity needs n >= 3, got n={t.n}")
    if t.n > ORACLE_CAP:
        raise TooLargeError(f"brute force capped at n <= {ORACLE_CAP}, got n={t.n}")
    all_arcs = list(t.arcs())
    for k in range(len(all_arcs) + 1):
        for subset in combinations(all_arcs, k):
            if not is_simple_exhaustive(reverse_arcs(t, subset)):
                return k
    raise InvariantViolationError("no reversal set found")  # unreachable for n >= 3
