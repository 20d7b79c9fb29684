"""On-disk formats: .trn tournament files, +-1 matrix files, reports.

The .trn format is line 1 = decimal n, then n lines of n characters
'0'/'1' where character j of data line i is 1 iff i beats j; LF line
endings, nothing after the last row.  Matrix files are line 1 = order,
then space-separated +1/-1 tokens.  Both emitters are byte-stable so
generated fixtures diff cleanly; reports fix their key order for the
same reason.
"""

from __future__ import annotations

import csv
import io
import json

from .constructions import SkewHadamard, skew_hadamard
from .core import Tournament, from_matrix
from .errors import ParseError


def emit_tournament(t: Tournament) -> str:
    lines = [str(t.n)]
    for row in t.out_rows:
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(t.n)))
    return "\n".join(lines) + "\n"


def parse_tournament(text: str) -> Tournament:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise ParseError("missing trailing newline", line=len(lines))
    if not lines:
        raise ParseError("empty file", line=1)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"expected a vertex count, got {lines[0]!r}", line=1) from None
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}", line=1)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} data lines, found {len(lines) - 1}",
                         line=len(lines))
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if len(line) != n:
            raise ParseError(f"row has {len(line)} characters, expected {n}", line=i,
                             column=min(len(line), n) + 1)
        row = []
        for j, ch in enumerate(line):
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r}", line=i, column=j + 1)
            row.append(ch == "1")
        rows.append(row)
    return from_matrix(rows)


def load_tournament(path) -> Tournament:
    with open(path, encoding="ascii") as fh:
        return parse_tournament(fh.read())


def save_tournament(t: Tournament, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(emit_tournament(t))


def emit_matrix(h: SkewHadamard) -> str:
    lines = [str(h.order)]
    for row in h.entries:
        lines.append(" ".join("+1" if v == 1 else "-1" for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SkewHadamard:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty file", line=1)
    try:
        m = int(lines[0])
    except ValueError:
        raise ParseError(f"expected a matrix order, got {lines[0]!r}", line=1) from None
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} data lines, found {len(lines) - 1}",
                         line=len(lines))
    entries = []
    for i, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != m:
            raise ParseError(f"row has {len(tokens)} entries, expected {m}", line=i)
        row = []
        for j, tok in enumerate(tokens):
            if tok in ("+1", "1"):
                row.append(1)
            elif tok == "-1":
                row.append(-1)
            else:
                raise ParseError(f"invalid entry {tok!r}", line=i, column=j + 1)
        entries.append(row)
    return skew_hadamard(entries)


def load_matrix(path) -> SkewHadamard:
    with open(path, encoding="ascii") as fh:
        return parse_matrix(fh.read())


def save_matrix(h: SkewHadamard, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(emit_matrix(h))


# --- reports ------------------------------------------------------------------

def simplicity_report_dict(rep) -> dict:
    return {
        "s": rep.s,
        "witness_module": list(rep.witness_module),
        "witness_arcs": [list(a) for a in rep.witness_arcs],
        "min_degree": rep.min_degree,
        "min_separators": rep.min_separators,
        "congruence_bound": rep.congruence_bound,
        "subsets_examined": rep.subsets_examined,
        "subsets_pruned": rep.subsets_pruned,
    }


def suite_report_dict(rep) -> dict:
    checks = []
    for c in rep.checks:
        entry = {"name": c.name, "passed": c.passed, "count": c.count}
        if c.witness is not None:
            entry["witness"] = c.witness
        if c.fixture is not None:
            entry["fixture"] = c.fixture
        checks.append(entry)
    return {
        "suite": rep.suite,
        "passed": rep.passed,
        "instances": rep.instances,
        "checks": checks,
    }


def report_json(tool_version: str, command: str, input_desc: str, results: list,
                seed: int | None = None) -> str:
    doc = {"tool_version": tool_version, "command": command}
    if seed is not None:
        doc["seed"] = seed
    doc["input"] = input_desc
    doc["results"] = results
    return json.dumps(doc, indent=2) + "\n"


def suite_report_csv(rep) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "check", "passed", "count", "witness"])
    for c in rep.checks:
        writer.writerow([rep.suite, c.name, "pass" if c.passed else "fail",
                         c.count, c.witness or ""])
    return buf.getvalue()
