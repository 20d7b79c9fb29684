"""Command-line surface: generation, analysis, verification, conversion.

Exit codes: 0 success / all checks pass, 1 a verification check failed,
2 usage, parse, or domain-precondition errors.
"""

from __future__ import annotations

import os
import sys

import click

from . import __version__, formats, verify
from .constructions import (
    is_doubly_regular,
    from_skew_hadamard,
    paley_tournament,
    random_tournament,
    to_skew_hadamard,
)
from .core import regularity_class, delete_vertices
from .errors import TournamentError
from .modsimp import (
    EXACT_CAP,
    arrow_simplicity,
    cheap_witnesses,
    congruence_bound,
    default_backend,
    is_simple,
)


def _command_line() -> str:
    return " ".join(sys.argv[1:])


def _fail_domain(exc: TournamentError):
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


@click.group()
@click.version_option(__version__)
def main():
    """Exact arrow-simplicity of tournaments, with generators and
    verification suites for the extremal families."""


# --- gen ----------------------------------------------------------------------

@main.group()
def gen():
    """Generate a tournament file."""


def _emit_generated(t, out, seed=None):
    formats.save_tournament(t, out)
    kind = regularity_class(t).kind if t.n >= 2 else "trivial"
    click.echo(f"{out}: n={t.n} {kind}")


@gen.command("paley")
@click.argument("q", type=int)
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def gen_paley(q, out):
    """Quadratic-residue tournament on a prime Q = 3 mod 4."""
    try:
        _emit_generated(paley_tournament(q), out)
    except TournamentError as exc:
        _fail_domain(exc)


@gen.command("random")
@click.argument("n", type=int)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def gen_random(n, seed, out):
    """Seeded uniform random tournament; identical bytes for identical
    (N, seed) on every platform."""
    try:
        _emit_generated(random_tournament(n, seed), out)
    except TournamentError as exc:
        _fail_domain(exc)


@gen.command("paley-minus")
@click.argument("q", type=int)
@click.option("--delete", "deleted", required=True,
              help="comma-separated vertex labels to remove")
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def gen_paley_minus(q, deleted, out):
    """Residue tournament with the listed vertices deleted."""
    try:
        drop = [int(v) for v in deleted.split(",") if v != ""]
    except ValueError:
        raise click.UsageError(f"--delete expects comma-separated integers, got {deleted!r}")
    try:
        _emit_generated(delete_vertices(paley_tournament(q), drop), out)
    except TournamentError as exc:
        _fail_domain(exc)


# --- analyze ------------------------------------------------------------------

@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--exact/--bounds-only", "exact", default=True,
              help="exact subset search (n <= 24) or cheap bounds only")
@click.option("--json", "json_out", type=click.Path(dir_okay=False),
              help="also write a JSON report")
@click.option("--workers", type=int, default=1, show_default=True)
def analyze(path, exact, json_out, workers):
    """Arrow-simplicity, bounds, and witnesses for a .trn file."""
    try:
        t = formats.load_tournament(path)
        simple = is_simple(t)
        doubly = is_doubly_regular(t) is not None
        if exact:
            rep = arrow_simplicity(t, workers=workers)
            result = formats.simplicity_report_dict(rep)
            result["simple"] = simple
            result["doubly_regular"] = doubly
            click.echo(f"n={t.n} s={rep.s} min_degree={rep.min_degree} "
                       f"min_separators={rep.min_separators} "
                       f"congruence_bound={rep.congruence_bound}")
            click.echo(f"simple={simple} doubly_regular={doubly}")
            click.echo(f"witness module: {list(rep.witness_module)}")
            click.echo(f"witness arcs ({len(rep.witness_arcs)}): "
                       f"{[list(a) for a in rep.witness_arcs]}")
            click.echo(f"subsets examined={rep.subsets_examined} "
                       f"pruned={rep.subsets_pruned} backend={default_backend()}")
        else:
            (vx, v_arcs), (pair, p_arcs) = cheap_witnesses(t)
            bound = min(len(v_arcs), len(p_arcs), congruence_bound(t.n))
            result = {
                "s_upper_bound": bound,
                "min_degree": len(v_arcs),
                "min_separators": len(p_arcs),
                "congruence_bound": congruence_bound(t.n),
                "vertex_witness": {"vertex": vx, "arcs": [list(a) for a in v_arcs]},
                "pair_witness": {"pair": list(pair), "arcs": [list(a) for a in p_arcs]},
                "simple": simple,
                "doubly_regular": doubly,
            }
            click.echo(f"n={t.n} s<={bound} min_degree={len(v_arcs)} "
                       f"min_separators={len(p_arcs)} "
                       f"congruence_bound={congruence_bound(t.n)}")
            click.echo(f"simple={simple} doubly_regular={doubly}")
            click.echo(f"vertex witness: isolate {vx} via {len(v_arcs)} arcs")
            click.echo(f"pair witness: merge {list(pair)} via {len(p_arcs)} arcs")
        if json_out:
            doc = formats.report_json(__version__, _command_line(), path, [result])
            with open(json_out, "w", encoding="ascii", newline="") as fh:
                fh.write(doc)
            click.echo(f"report: {json_out}")
    except TournamentError as exc:
        _fail_domain(exc)


# --- verify -------------------------------------------------------------------

_SUITES = ("identities", "bounds", "theorem1", "theorem9", "characterize", "lakhlifi")


@main.command("verify")
@click.argument("suite", type=click.Choice(_SUITES))
@click.option("--exhaustive", "exhaustive_n", type=int, metavar="N",
              help="enumerate all labeled tournaments of order N (N <= 6)")
@click.option("--samples", type=int, help="number of seeded random instances")
@click.option("--n", "order", type=int, help="order for sampled instances")
@click.option("--min-n", type=int, help="smallest sampled order")
@click.option("--max-n", type=int, help="largest sampled order")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--q", type=int, help="residue-tournament order for the deletion suites")
@click.option("--json", "json_out", type=click.Path(dir_okay=False))
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False))
@click.option("--fixture-dir", type=click.Path(file_okay=False), default=".",
              show_default=True, help="where failing instances are written")
@click.option("--workers", type=int, default=1, show_default=True)
def verify_cmd(suite, exhaustive_n, samples, order, min_n, max_n, seed, q,
               json_out, csv_out, fixture_dir, workers):
    """Run a verification suite; exits 0 only if every check passes."""
    try:
        if suite == "identities":
            rep = verify.identities_population(min_n or 3, max_n or 16,
                                               samples or 500, seed, workers)
        elif suite == "bounds":
            rep = verify.bounds_population(min_n or 3, max_n or 12,
                                           samples or 200, seed, workers)
        elif suite == "theorem1":
            if exhaustive_n is not None:
                rep = verify.congruence_population("exhaustive", exhaustive_n,
                                                   workers=workers)
            else:
                rep = verify.congruence_population("sample", order or 13,
                                                   samples or 200, seed, workers)
        elif suite == "theorem9":
            rep = verify.deletion_tightness_suite(q or 11, workers)
        elif suite == "characterize":
            qs = (q,) if q else (7, 11)
            rep = verify.characterization_population(qs, samples or 0,
                                                     order or 6, seed, workers)
        else:  # lakhlifi
            rep = verify.extension_round_trip_suite(q or 7)
    except TournamentError as exc:
        _fail_domain(exc)

    for c in rep.checks:
        status = "PASS" if c.passed else "FAIL"
        extra = "" if c.passed else f" — {c.witness}"
        click.echo(f"[{status}] {c.name} ({c.count}){extra}")
    click.echo(f"{rep.suite}: {rep.instances} instances, "
               f"{'all checks passed' if rep.passed else 'FAILURES'}")

    if json_out:
        doc = formats.report_json(__version__, _command_line(), rep.suite,
                                  [formats.suite_report_dict(rep)], seed=seed)
        with open(json_out, "w", encoding="ascii", newline="") as fh:
            fh.write(doc)
    if csv_out:
        with open(csv_out, "w", encoding="ascii", newline="") as fh:
            fh.write(formats.suite_report_csv(rep))
    if not rep.passed:
        os.makedirs(fixture_dir, exist_ok=True)
        for c in rep.checks:
            if not c.passed and c.fixture:
                fix = os.path.join(fixture_dir, f"failing_{rep.suite}_{c.name}.trn")
                with open(fix, "w", encoding="ascii", newline="") as fh:
                    fh.write(c.fixture)
                click.echo(f"fixture: {fix}", err=True)
        first = rep.first_failure()
        click.echo(f"first failure: {first.name} — {first.witness}", err=True)
        sys.exit(1)


# --- convert ------------------------------------------------------------------

@main.command()
@click.argument("direction", type=click.Choice(["dr-to-hadamard", "hadamard-to-dr"]))
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False))
def convert(direction, path, out):
    """Bridge between doubly regular tournaments and skew +-1 matrices."""
    try:
        if direction == "dr-to-hadamard":
            h = to_skew_hadamard(formats.load_tournament(path))
            formats.save_matrix(h, out)
            click.echo(f"{out}: order {h.order} skew matrix, invariants verified")
        else:
            t = from_skew_hadamard(formats.load_matrix(path))
            formats.save_tournament(t, out)
            click.echo(f"{out}: n={t.n} doubly regular tournament")
    except TournamentError as exc:
        _fail_domain(exc)


if __name__ == "__main__":
    main()
