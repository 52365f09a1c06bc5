"""Plain-text identity catalog: parsing and lint.

One record per block::

    [C2] anchor="classical-listing" quote="q/(1-q)^2" order=40
         lhs="lambert(phi)" rhs="q/(1-q)^2" expected=verified

Values are shell-quoted; ``#`` starts a comment outside quotes.  Alternative
readings are numbered: ``reading1.rhs=...``, ``reading2.lhs=...``.
"""
from __future__ import annotations

import re
import shlex
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .dsl import ParseError, parse

STATUSES = ("verified", "erratum", "unresolved")

_HEADER = re.compile(r"^\[([A-Za-z][A-Za-z0-9_.-]*)\]\s*(.*)$")
_READING = re.compile(r"^reading(\d+)\.(lhs|rhs)$")
_PLAIN = {"anchor", "quote", "order", "lhs", "rhs", "expected", "note"}


class CatalogError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Reading:
    index: int
    lhs: Optional[str] = None
    rhs: Optional[str] = None


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str
    quote: str
    lhs: str
    rhs: str
    order: int = 40
    expected: str = "verified"
    readings: tuple = ()
    note: str = ""
    line: int = field(default=0, compare=False)

    def reading_sides(self, r: Reading) -> tuple[str, str]:
        return (r.lhs or self.lhs, r.rhs or self.rhs)

    def with_expected(self, status: str) -> "IdentityRecord":
        return IdentityRecord(self.id, self.anchor, self.quote, self.lhs, self.rhs, self.order,
                              status, self.readings, self.note, self.line)


def _blocks(text: str):
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        m = _HEADER.match(raw.strip())
        if m:
            if cur:
                yield cur
            cur = [m.group(1), lineno, [m.group(2)]]
        elif cur is not None:
            cur[2].append(raw)
        elif raw.strip() and not raw.strip().startswith("#"):
            raise CatalogError("text outside a record", lineno)
    if cur:
        yield cur


def _record(rid: str, line: int, body: str) -> IdentityRecord:
    try:
        tokens = shlex.split(body, comments=True)
    except ValueError as e:
        raise CatalogError(f"[{rid}] {e}", line) from None
    fields: dict = {}
    readings: dict = {}
    for tok in tokens:
        key, eq, value = tok.partition("=")
        if not eq:
            raise CatalogError(f"[{rid}] expected key=value, got {tok!r}", line)
        m = _READING.match(key)
        if m:
            readings.setdefault(int(m.group(1)), {})[m.group(2)] = value
        elif key in _PLAIN:
            if key in fields:
                raise CatalogError(f"[{rid}] duplicate field {key!r}", line)
            fields[key] = value
        else:
            raise CatalogError(f"[{rid}] unknown field {key!r}", line)
    for key in ("lhs", "rhs"):
        if key not in fields:
            raise CatalogError(f"[{rid}] missing field {key!r}", line)
    try:
        order = int(fields.get("order", "40"))
    except ValueError:
        raise CatalogError(f"[{rid}] order must be an integer", line) from None
    rs = tuple(Reading(i, v.get("lhs"), v.get("rhs")) for i, v in sorted(readings.items()))
    return IdentityRecord(rid, fields.get("anchor", ""), fields.get("quote", ""), fields["lhs"], fields["rhs"],
                          order, fields.get("expected", "verified"), rs, fields.get("note", ""), line)


def lint(records) -> list[str]:
    """Problems that make a catalog unusable; empty when clean."""
    problems = []
    seen = set()
    for r in records:
        where = f"line {r.line}: [{r.id}]"
        if r.id in seen:
            problems.append(f"{where} duplicate id")
        seen.add(r.id)
        if not r.anchor.strip():
            problems.append(f"{where} missing anchor")
        if not r.quote.strip():
            problems.append(f"{where} missing quote")
        if r.order < 1:
            problems.append(f"{where} order must be >= 1")
        if r.expected not in STATUSES:
            problems.append(f"{where} expected must be one of {', '.join(STATUSES)}")
        exprs = [("lhs", r.lhs), ("rhs", r.rhs)]
        for rd in r.readings:
            exprs += [(f"reading{rd.index}.lhs", rd.lhs), (f"reading{rd.index}.rhs", rd.rhs)]
        for label, text in exprs:
            if text is None:
                continue
            try:
                parse(text)
            except ParseError as e:
                problems.append(f"{where} {label}: {e}")
        if [rd.index for rd in r.readings] != list(range(1, len(r.readings) + 1)):
            problems.append(f"{where} readings must be numbered 1, 2, ...")
    return problems


def parse_catalog(text: str, check: bool = True) -> list[IdentityRecord]:
    records = [_record(rid, line, "\n".join(body)) for rid, line, body in _blocks(text)]
    if check:
        problems = lint(records)
        if problems:
            raise CatalogError("catalog lint failed:\n  " + "\n  ".join(problems))
    return records


def default_catalog_path() -> Path:
    """``catalog/identities.cat`` in the working directory, else the packaged copy."""
    local = Path("catalog") / "identities.cat"
    if local.is_file():
        return local
    return Path(__file__).resolve().parent.parent / "catalog" / "identities.cat"


def load_catalog(path=None, check: bool = True) -> list[IdentityRecord]:
    p = Path(path) if path is not None else default_catalog_path()
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise CatalogError(f"cannot read catalog {p}: {e.strerror or e}") from None
    return parse_catalog(text, check)
