"""Verification engine: evaluate both sides, adjudicate, collect a report."""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Optional

from ..fps import DomainError, format_exact
from .catalog import STATUSES, IdentityRecord
from .dsl import evaluate

FIELDS = ("id", "status", "order", "mismatch_index", "mismatch_lhs", "mismatch_rhs", "reading", "ms")


@dataclass
class RecordResult:
    id: str
    status: str
    order: int
    expected: str
    mismatch_index: Optional[object] = None
    mismatch_lhs: Optional[str] = None
    mismatch_rhs: Optional[str] = None
    reading: Optional[int] = None
    ms: float = 0.0
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == self.expected

    def row(self, timing: bool = True) -> dict:
        out = {k: getattr(self, k) for k in FIELDS}
        out["ms"] = round(self.ms, 1) if timing else None
        return out


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    @property
    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def unexpected(self) -> list:
        return [r for r in self.results if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def by_id(self, rid: str) -> RecordResult:
        for r in self.results:
            if r.id == rid:
                return r
        raise KeyError(rid)


class _Failure:
    """Why a printed side could not be evaluated."""

    def __init__(self, exc: Exception):
        self.exc = exc
        self.at = getattr(exc, "at", None)

    def __str__(self) -> str:
        return f"{type(self.exc).__name__}: {self.exc}"


def _eval(text: str, N: int, cache: dict):
    if text not in cache:
        try:
            cache[text] = evaluate(text, N)
        except Exception as e:  # evaluation errors are data, never fatal
            cache[text] = _Failure(e)
    return cache[text]


def _compare(a, b):
    """``None`` when equal, else ``(index, lhs, rhs)`` for the first difference."""
    n = min(a.order, b.order)
    for k in range(n + 1):
        if a[k] != b[k]:
            return k, format_exact(a[k]), format_exact(b[k])
    return None


def _index_text(at) -> object:
    if at is None:
        return None
    if getattr(at, "denominator", 1) == 1:
        return int(at)
    return format_exact(at)


def verify(record: IdentityRecord, order: Optional[int] = None) -> RecordResult:
    """Adjudicate one record at ``order`` (default: the record's own order)."""
    N = order or record.order
    t0 = time.perf_counter()
    cache: dict = {}
    lhs, rhs = _eval(record.lhs, N, cache), _eval(record.rhs, N, cache)
    res = RecordResult(record.id, "unresolved", N, record.expected)
    printed_failure = None
    if isinstance(lhs, _Failure) or isinstance(rhs, _Failure):
        printed_failure = lhs if isinstance(lhs, _Failure) else rhs
        res.message = f"printed form not evaluable: {printed_failure}"
        if printed_failure.at is not None:
            # the printed side leaves the power-series ring at a fractional exponent
            res.mismatch_index = _index_text(printed_failure.at)
            bad_left = isinstance(lhs, _Failure)
            res.mismatch_lhs = "undefined" if bad_left else "0"
            res.mismatch_rhs = "0" if bad_left else "undefined"
    else:
        res.order = min(lhs.order, rhs.order)
        diff = _compare(lhs, rhs)
        if diff is None:
            res.status = "verified"
            res.ms = (time.perf_counter() - t0) * 1000
            return res
        res.mismatch_index, res.mismatch_lhs, res.mismatch_rhs = diff
    notes = []
    for rd in record.readings:
        l_text, r_text = record.reading_sides(rd)
        a, b = _eval(l_text, N, cache), _eval(r_text, N, cache)
        if isinstance(a, _Failure) or isinstance(b, _Failure):
            notes.append(f"reading {rd.index}: {a if isinstance(a, _Failure) else b}")
            continue
        if _compare(a, b) is None:
            if res.mismatch_index is None:
                # no located mismatch to report, so the record cannot be an erratum
                notes.append(f"reading {rd.index} holds")
                continue
            res.status = "erratum"
            res.reading = rd.index
            break
        else:
            notes.append(f"reading {rd.index}: differs at q^{_compare(a, b)[0]}")
    if res.status == "unresolved" and notes:
        res.message = "; ".join(filter(None, [res.message] + notes))
    res.ms = (time.perf_counter() - t0) * 1000
    return res


def _natural_key(rid: str):
    return [int(t) if t.isdigit() else t for t in re.findall(r"\d+|\D+", rid)]


def verify_all(records, order_override: Optional[int] = None, ids=None) -> VerificationReport:
    """Verify every record (or those in ``ids``), ordered deterministically by id."""
    chosen = [r for r in records if ids is None or r.id in ids]
    if ids is not None:
        missing = set(ids) - {r.id for r in chosen}
        if missing:
            raise KeyError(f"no record with id {', '.join(sorted(missing))}")
    chosen.sort(key=lambda r: _natural_key(r.id))
    return VerificationReport([verify(r, order_override) for r in chosen])
