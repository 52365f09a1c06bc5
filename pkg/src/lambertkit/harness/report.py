"""Render a VerificationReport as a text table, JSON, Markdown or CSV."""
from __future__ import annotations

import csv
import io
import json

from .catalog import STATUSES
from .verify import FIELDS, VerificationReport

FORMATS = ("table", "json", "md", "csv")


def _cell(v) -> str:
    return "-" if v is None else str(v)


def _rows(report: VerificationReport, timing: bool) -> list[dict]:
    return [r.row(timing) for r in report.results]


def _summary(report: VerificationReport) -> str:
    counts = ", ".join(f"{s}={n}" for s, n in report.counts.items())
    bad = report.unexpected
    tail = "all records match their expected status" if not bad else (
        "unexpected: " + ", ".join(f"{r.id} ({r.expected} -> {r.status})" for r in bad)
    )
    return f"{len(report.results)} records: {counts}; {tail}"


def render_table(report: VerificationReport, timing: bool = True) -> str:
    rows = [[_cell(v) for v in row.values()] for row in _rows(report, timing)]
    widths = [len(f) for f in FIELDS]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(FIELDS), line(["-" * w for w in widths])]
    out += [line(r) for r in rows]
    out += ["", _summary(report)]
    return "\n".join(out) + "\n"


def render_json(report: VerificationReport, timing: bool = True) -> str:
    doc = {
        "records": _rows(report, timing),
        "counts": report.counts,
        "unexpected": [r.id for r in report.unexpected],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_md(report: VerificationReport, timing: bool = True) -> str:
    esc = lambda s: s.replace("|", "\\|")
    out = ["| " + " | ".join(FIELDS) + " |", "|" + "---|" * len(FIELDS)]
    for row in _rows(report, timing):
        out.append("| " + " | ".join(esc(_cell(v)) for v in row.values()) + " |")
    out += ["", "| status | count |", "|---|---|"]
    out += [f"| {s} | {report.counts[s]} |" for s in STATUSES]
    out += ["", _summary(report)]
    return "\n".join(out) + "\n"


def render_csv(report: VerificationReport, timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for row in _rows(report, timing):
        w.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def render(report: VerificationReport, fmt: str = "table", timing: bool = True) -> str:
    try:
        fn = {"table": render_table, "json": render_json, "md": render_md, "csv": render_csv}[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return fn(report, timing)


def render_bench(rows) -> str:
    """Plain table for benchmark rows."""
    head = ("N", "strategy", "seconds", "agree")
    body = [
        (str(r.N), r.strategy, "skipped" if r.seconds is None else f"{r.seconds:.4f}", _cell(r.agree))
        for r in rows
    ]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h) for i, h in enumerate(head)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return "\n".join([line(head)] + [line(b) for b in body]) + "\n"
