"""Machine-checkable suites for the library's identities, bounds, and
tightness claims, plus exhaustive/sampled sweeps at desk scale.

Every check compares exact integers; there is no floating point
anywhere.  A failing check always carries a reproducible witness (the
instance label, which embeds the enumeration index or seed) and the
full instance serialized in .trn form for replay.  Populations can be
partitioned across worker processes; chunks are merged in index order,
so reports are bit-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import formats
from .constructions import (
    is_doubly_regular,
    near_regular_partition,
    paley_tournament,
    random_tournament,
    separator_conditions_hold,
    arc_class_profile_holds,
    extend_to_doubly_regular,
    tournament_from_bits,
)
from .core import (
    NEAR_REGULAR,
    Tournament,
    delete_vertices,
    pair_stats,
    regularity_class,
)
from .errors import (
    ConditionsViolatedError,
    NotNearRegularError,
    TooLargeForExhaustiveError,
    TooSmallError,
    WrongShapeError,
)
from .modsimp import (
    SimplicityReport,
    arrow_simplicity,
    arrow_simplicity_brute_force,
)

EXHAUSTIVE_CAP = 6


@dataclass
class CheckResult:
    """One named check, possibly aggregated over many instances."""

    name: str
    passed: bool
    count: int = 1
    witness: str | None = None   # locator of the first failing instance
    fixture: str | None = None   # that instance in .trn form


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    instances: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)


def _ok(name: str) -> CheckResult:
    return CheckResult(name, True)


def _bad(name: str, label: str, t: Tournament, detail: str) -> CheckResult:
    return CheckResult(name, False, witness=f"{label}: {detail}",
                       fixture=formats.emit_tournament(t))


def _aggregate(agg: dict[str, CheckResult], results) -> None:
    for r in results:
        cur = agg.get(r.name)
        if cur is None:
            agg[r.name] = CheckResult(r.name, r.passed, r.count, r.witness, r.fixture)
        else:
            cur.count += r.count
            if cur.passed and not r.passed:
                cur.passed = False
                cur.witness = r.witness
                cur.fixture = r.fixture


# --- per-instance check builders ----------------------------------------------

def _identity_checks(t: Tournament, label: str) -> list[CheckResult]:
    n = t.n
    outs = [r.bit_count() for r in t.out_rows]
    ins = [r.bit_count() for r in t.in_rows]
    checks = []

    half = n * (n - 1) // 2
    if sum(outs) == half == sum(ins):
        checks.append(_ok("degree-sum"))
    else:
        checks.append(_bad("degree-sum", label, t,
                           f"sum out={sum(outs)} sum in={sum(ins)} expected {half}"))

    partition_bad = difference_bad = None
    sep_total = common_dom_total = common_beaten_total = 0
    for x in range(n):
        for y in range(x + 1, n):
            st = pair_stats(t, x, y)
            sep_total += st.separators
            common_dom_total += st.in_pair
            common_beaten_total += st.out_pair
            if partition_bad is None and (
                    st.separators + st.in_pair + st.out_pair != n - 2):
                partition_bad = (x, y, st)
            if difference_bad is None:
                if st.in_pair - st.out_pair != ins[x] - outs[y]:
                    difference_bad = (x, y, st)
                elif st.in_pair - st.out_pair != ins[y] - outs[x]:
                    difference_bad = (y, x, st)
    if partition_bad is None:
        checks.append(_ok("pair-partition"))
    else:
        x, y, st = partition_bad
        checks.append(_bad("pair-partition", label, t, f"pair ({x},{y}) stats {st}"))
    if difference_bad is None:
        checks.append(_ok("pair-degree-difference"))
    else:
        x, y, st = difference_bad
        checks.append(_bad("pair-degree-difference", label, t,
                           f"ordered pair ({x},{y}) stats {st}"))

    for name, total, want in (
            ("separator-total", sep_total,
             sum(o * i for o, i in zip(outs, ins))),
            ("common-dominators-total", common_dom_total,
             sum(comb(d, 2) for d in outs)),
            ("common-beaten-total", common_beaten_total,
             sum(comb(d, 2) for d in ins))):
        if total == want:
            checks.append(_ok(name))
        else:
            checks.append(_bad(name, label, t, f"got {total}, expected {want}"))
    return checks


def _bound_checks(t: Tournament, rep: SimplicityReport, label: str) -> list[CheckResult]:
    n = t.n
    cap = (n - 1) // 2
    checks = []
    for name, lhs, rhs in (
            ("degree-min-cap", rep.min_degree, cap),
            ("separator-min-cap", rep.min_separators, cap),
            ("s-le-degree-min", rep.s, rep.min_degree),
            ("s-le-separator-min", rep.s, rep.min_separators),
            ("s-le-congruence-bound", rep.s, rep.congruence_bound)):
        if lhs <= rhs:
            checks.append(_ok(name))
        else:
            checks.append(_bad(name, label, t, f"{name}: {lhs} > {rhs}"))
    if n % 4 == 3:
        at_max = rep.s == (n - 1) // 2
        dr = is_doubly_regular(t) is not None
        if at_max == dr:
            checks.append(_ok("max-equality-doubly-regular"))
        else:
            checks.append(_bad("max-equality-doubly-regular", label, t,
                               f"s={rep.s} doubly_regular={dr}"))
    else:
        checks.append(_ok("max-equality-doubly-regular"))
    return checks


def _near_regular_sum_check(t: Tournament, label: str) -> CheckResult:
    k = t.n // 4
    total = sum(pair_stats(t, x, y).separators
                for x in range(t.n) for y in range(x + 1, t.n))
    want = 8 * k * k * (2 * k - 1)
    if total == want:
        return _ok("near-regular-separator-total")
    return _bad("near-regular-separator-total", label, t,
                f"sum of separators {total}, expected {want}")


def _characterization_checks(t: Tournament, rep: SimplicityReport,
                             label: str) -> list[CheckResult]:
    k = (t.n - 2) // 4
    try:
        part = near_regular_partition(t)
        extendable = separator_conditions_hold(t, part)
        if extendable:
            extend_to_doubly_regular(t, part)
    except NotNearRegularError:
        extendable = False
    at_max = rep.s == 2 * k
    checks = []
    if at_max and not extendable:
        checks.append(_bad("max-implies-extendable", label, t,
                           f"s={rep.s}=2k but the one-vertex extension fails"))
    else:
        checks.append(_ok("max-implies-extendable"))
    if extendable and not at_max:
        checks.append(_bad("extendable-implies-max", label, t,
                           f"extension succeeds but s={rep.s} != {2 * k}"))
    else:
        checks.append(_ok("extendable-implies-max"))
    return checks


# --- public single-instance suites ---------------------------------------------

def identity_suite(t: Tournament, label: str = "instance") -> SuiteReport:
    """Exact integer identities: degree sums, the pair partition, the
    pair degree difference, and the three double-counting totals.
    """
    if t.n < 3:
        raise TooSmallError(f"identity suite needs n >= 3, got n={t.n}")
    return SuiteReport("identities", _identity_checks(t, label), 1)


def bound_suite(t: Tournament, rep: SimplicityReport | None = None,
                label: str = "instance") -> SuiteReport:
    """Degree/separator caps, the two cheap upper bounds on s, the
    congruence-class bound, and the equality case at n = 4k+3 (s hits
    (n-1)/2 exactly for doubly regular tournaments).
    """
    if rep is None:
        rep = arrow_simplicity(t)
    return SuiteReport("bounds", _bound_checks(t, rep, label), 1)


def near_regular_even_sum(t: Tournament, label: str = "instance") -> SuiteReport:
    """For near-regular n = 4k: the separator counts over all pairs sum
    to exactly 8k^2(2k-1).
    """
    if t.n % 4 != 0:
        raise WrongShapeError(f"need n = 0 mod 4, got n={t.n}")
    if regularity_class(t).kind != NEAR_REGULAR:
        raise WrongShapeError("tournament is not near-regular")
    return SuiteReport("near-regular-sum", [_near_regular_sum_check(t, label)], 1)


def max_simplicity_characterization(t: Tournament, rep: SimplicityReport | None = None,
                                    label: str = "instance") -> SuiteReport:
    """Both directions of the n = 4k+2 characterization: s = 2k iff the
    tournament extends (by one vertex against its degree split) to a
    doubly regular tournament.
    """
    if t.n % 4 != 2:
        raise WrongShapeError(f"need n = 2 mod 4, got n={t.n}")
    if rep is None:
        rep = arrow_simplicity(t)
    return SuiteReport("characterization", _characterization_checks(t, rep, label), 1)


# --- populations ----------------------------------------------------------------

def _instance_stream(chunk):
    kind = chunk["kind"]
    if kind == "exhaustive":
        n = chunk["n"]
        for index in range(chunk["start"], chunk["stop"]):
            yield f"n={n} index={index}", tournament_from_bits(n, index)
    elif kind == "sample":
        lo, hi = chunk["min_n"], chunk["max_n"]
        span = hi - lo + 1
        for i in range(chunk["start"], chunk["stop"]):
            n = lo + i % span
            seed = chunk["seed"] + i
            yield f"n={n} seed={seed}", random_tournament(n, seed)
    elif kind == "deletions":
        q, r = chunk["q"], chunk["r"]
        t = paley_tournament(q)
        combos = list(combinations(range(q), r))[chunk["start"]:chunk["stop"]]
        for drop in combos:
            yield f"q={q} drop={list(drop)}", delete_vertices(t, drop)
    else:
        raise ValueError(f"unknown chunk kind {kind!r}")


def _run_chunk(chunk) -> tuple[int, list[CheckResult]]:
    agg: dict[str, CheckResult] = {}
    count = 0
    checks = chunk["checks"]
    for label, t in _instance_stream(chunk):
        count += 1
        results = []
        rep = None
        if {"bounds", "oracle", "congruence", "characterization",
                "deletion-tightness"} & set(checks):
            rep = arrow_simplicity(t)
        if "identities" in checks:
            results += _identity_checks(t, label)
        if "bounds" in checks:
            results += _bound_checks(t, rep, label)
        if "oracle" in checks:
            brute = arrow_simplicity_brute_force(t)
            if rep.s == brute:
                results.append(_ok("oracle-equivalence"))
            else:
                results.append(_bad("oracle-equivalence", label, t,
                                    f"solver s={rep.s}, brute force {brute}"))
        if "congruence" in checks:
            if rep.s <= rep.congruence_bound:
                results.append(_ok("s-le-congruence-bound"))
            else:
                results.append(_bad("s-le-congruence-bound", label, t,
                                    f"s={rep.s} > {rep.congruence_bound}"))
            if t.n % 4 == 0 and regularity_class(t).kind == NEAR_REGULAR:
                results.append(_near_regular_sum_check(t, label))
        if "characterization" in checks:
            results += _characterization_checks(t, rep, label)
        if "deletion-tightness" in checks:
            want = chunk["expect_s"]
            if rep.s == want:
                results.append(_ok(chunk["check_name"]))
            else:
                results.append(_bad(chunk["check_name"], label, t,
                                    f"s={rep.s}, expected {want}"))
        _aggregate(agg, results)
    return count, list(agg.values())


def _population_report(suite: str, chunks, workers: int = 1) -> SuiteReport:
    agg: dict[str, CheckResult] = {}
    instances = 0
    if workers > 1 and len(chunks) > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            parts = pool.map(_run_chunk, chunks)
    else:
        parts = [_run_chunk(c) for c in chunks]
    for count, results in parts:
        instances += count
        _aggregate(agg, results)
    return SuiteReport(suite, list(agg.values()), instances)


def _split_range(total: int, workers: int, floor: int = 512):
    size = max(floor, -(-total // max(1, workers * 4)))
    return [(s, min(s + size, total)) for s in range(0, total, size)]


@dataclass(frozen=True)
class SweepConfig:
    mode: str          # "exhaustive" or "sample"
    n: int
    count: int = 0     # sample mode: number of instances
    seed: int = 0      # sample mode: base seed; instance i uses seed + i


def sweep(config: SweepConfig, workers: int = 1) -> SuiteReport:
    """Identity + bound suites (plus brute-force oracle equivalence when
    n <= 5) over an exhaustive or seeded-sample population.
    """
    if config.n < 3:
        raise TooSmallError(f"sweep needs n >= 3, got n={config.n}")
    checks = ("identities", "bounds")
    if config.n <= 5:
        checks += ("oracle",)
    if config.mode == "exhaustive":
        if config.n > EXHAUSTIVE_CAP:
            raise TooLargeForExhaustiveError(
                f"exhaustive mode capped at n <= {EXHAUSTIVE_CAP}, got n={config.n}")
        total = 1 << (config.n * (config.n - 1) // 2)
        chunks = [dict(kind="exhaustive", n=config.n, start=s, stop=e, checks=checks)
                  for s, e in _split_range(total, workers)]
        suite = f"sweep-exhaustive-n{config.n}"
    elif config.mode == "sample":
        chunks = [dict(kind="sample", min_n=config.n, max_n=config.n,
                       seed=config.seed, start=s, stop=e, checks=checks)
                  for s, e in _split_range(config.count, workers)]
        suite = f"sweep-sample-n{config.n}"
    else:
        raise ValueError(f"unknown sweep mode {config.mode!r}")
    return _population_report(suite, chunks, workers)


def identities_population(min_n: int, max_n: int, count: int, seed: int,
                          workers: int = 1) -> SuiteReport:
    """Identity suite over ``count`` seeded random tournaments with
    orders cycling through min_n..max_n (instance i gets order
    min_n + i mod span and seed ``seed + i``).
    """
    chunks = [dict(kind="sample", min_n=min_n, max_n=max_n, seed=seed,
                   start=s, stop=e, checks=("identities",))
              for s, e in _split_range(count, workers)]
    return _population_report("identities", chunks, workers)


def bounds_population(min_n: int, max_n: int, count: int, seed: int,
                      workers: int = 1) -> SuiteReport:
    """Bound suite (exact solver per instance) over a seeded population."""
    chunks = [dict(kind="sample", min_n=min_n, max_n=max_n, seed=seed,
                   start=s, stop=e, checks=("bounds",))
              for s, e in _split_range(count, workers)]
    return _population_report("bounds", chunks, workers)


def congruence_population(mode: str, n: int, count: int = 0, seed: int = 0,
                          workers: int = 1) -> SuiteReport:
    """Congruence-class bound over an exhaustive or sampled population,
    with the 8k^2(2k-1) separator total opportunistically checked on
    near-regular instances of order 4k.
    """
    if n < 3:
        raise TooSmallError(f"need n >= 3, got n={n}")
    if mode == "exhaustive":
        if n > EXHAUSTIVE_CAP:
            raise TooLargeForExhaustiveError(
                f"exhaustive mode capped at n <= {EXHAUSTIVE_CAP}, got n={n}")
        total = 1 << (n * (n - 1) // 2)
        chunks = [dict(kind="exhaustive", n=n, start=s, stop=e,
                       checks=("congruence",))
                  for s, e in _split_range(total, workers)]
    else:
        chunks = [dict(kind="sample", min_n=n, max_n=n, seed=seed,
                       start=s, stop=e, checks=("congruence",))
                  for s, e in _split_range(count, workers)]
    return _population_report(f"congruence-bound-{mode}-n{n}", chunks, workers)


def deletion_tightness_suite(q: int = 11, workers: int = 1) -> SuiteReport:
    """Tightness by deletion from the order-q residue tournament
    (k = (q-3)/4 >= 2): every 2-vertex deletion has s = 2k-1, every
    3-vertex deletion s = 2k-2.
    """
    k = (q - 3) // 4
    paley_tournament(q)  # validates q up front
    if k < 2:
        raise WrongShapeError(f"deletion tightness needs k >= 2, got k={k} (q={q})")
    chunks = []
    for r, expect, name in ((2, 2 * k - 1, "two-deletions-s"),
                            (3, 2 * k - 2, "three-deletions-s")):
        total = comb(q, r)
        chunks += [dict(kind="deletions", q=q, r=r, start=s, stop=e,
                        checks=("deletion-tightness",), expect_s=expect,
                        check_name=name)
                   for s, e in _split_range(total, workers, floor=32)]
    return _population_report(f"deletion-tightness-q{q}", chunks, workers)


def extension_round_trip_suite(q: int) -> SuiteReport:
    """Delete each vertex of the order-q residue tournament in turn and
    check the whole deleted-vertex tool chain: near-regularity, the
    separator conditions, the per-arc class profile, and the one-vertex
    extension landing back on a doubly regular tournament.
    """
    t = paley_tournament(q)
    k = (q - 3) // 4
    agg: dict[str, CheckResult] = {}
    for v in range(q):
        label = f"q={q} drop=[{v}]"
        r = delete_vertices(t, (v,))
        results = []
        try:
            part = near_regular_partition(r)
            ok = len(part.low) == len(part.high) == 2 * k + 1
            results.append(_ok("deleted-vertex-near-regular") if ok else
                           _bad("deleted-vertex-near-regular", label, r,
                                f"class sizes {len(part.low)}/{len(part.high)}"))
        except NotNearRegularError as exc:
            results.append(_bad("deleted-vertex-near-regular", label, r, str(exc)))
            _aggregate(agg, results)
            continue
        if separator_conditions_hold(r, part):
            results.append(_ok("separator-conditions"))
            arc_ok = arc_class_profile_holds(r, part)
            results.append(_ok("arc-class-profile") if arc_ok else
                           _bad("arc-class-profile", label, r, "case table violated"))
            try:
                extend_to_doubly_regular(r, part)
                results.append(_ok("extension-doubly-regular"))
            except ConditionsViolatedError as exc:
                results.append(_bad("extension-doubly-regular", label, r, str(exc)))
        else:
            results.append(_bad("separator-conditions", label, r,
                                "separator pattern violated"))
        _aggregate(agg, results)
    return SuiteReport(f"extension-round-trip-q{q}", list(agg.values()), q)


def characterization_population(qs=(7, 11), samples: int = 0, n: int = 6,
                                seed: int = 0, workers: int = 1) -> SuiteReport:
    """The n = 4k+2 characterization over every single-vertex deletion
    of the order-q residue tournaments (where s = 2k exactly and the
    extension must succeed) plus optional seeded random instances of
    order ``n`` exercising the vacuous direction.
    """
    agg: dict[str, CheckResult] = {}
    instances = 0
    for q in qs:
        t = paley_tournament(q)
        k = (q - 3) // 4
        for v in range(q):
            label = f"q={q} drop=[{v}]"
            r = delete_vertices(t, (v,))
            rep = arrow_simplicity(r)
            instances += 1
            results = list(_characterization_checks(r, rep, label))
            if rep.s == 2 * k:
                results.append(_ok("deleted-vertex-max-simplicity"))
            else:
                results.append(_bad("deleted-vertex-max-simplicity", label, r,
                                    f"s={rep.s}, expected {2 * k}"))
            _aggregate(agg, results)
    if samples:
        if n % 4 != 2:
            raise WrongShapeError(f"characterization needs n = 2 mod 4, got n={n}")
        chunks = [dict(kind="sample", min_n=n, max_n=n, seed=seed,
                       start=s, stop=e, checks=("characterization",))
                  for s, e in _split_range(samples, workers)]
        part = _population_report("characterization", chunks, workers)
        instances += part.instances
        _aggregate(agg, part.checks)
    return SuiteReport("characterization", list(agg.values()), instances)
