"""Timing of three independent routes to the divisor sums ``(f*1)(n)``, ``n <= N``.

* ``naive``: the Lambert series summed term by term as dense truncated series,
  ``O(N^2)`` work.
* ``sieve``: ``acc[d::d] += f(d)``, ``O(N log N)``.
* ``pentagonal``: the Euler-pentagonal recurrence, with the factorization
  triangle ``s[n][k] = sum_{j>=1} e[n - jk]`` built column by column from the
  coefficients ``e`` of ``(q;q)_inf``.

Integer-valued ``f`` run on ``int64`` arrays; anything else falls back to
object arrays of exact rationals.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from ..arith import ArithmeticFunction, builtin
from ..factorization import _pentagonal_terms

STRATEGIES = ("naive", "sieve", "pentagonal")
SLOW_LIMIT = 20_000


def f_table(f: Callable, N: int) -> np.ndarray:
    """``[0, f(1), ..., f(N)]`` as an ``int64`` array when possible."""
    vals = [0] + [f(n) for n in range(1, N + 1)]
    if all(isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1) for v in vals):
        ints = [int(v) for v in vals]
        if max(map(abs, ints), default=0) < 2**31:
            return np.array(ints, dtype=np.int64)
    return np.array([Fraction(v) for v in vals], dtype=object)


def _zeros(fv: np.ndarray) -> np.ndarray:
    if fv.dtype == object:
        out = np.empty(len(fv), dtype=object)
        out[:] = [Fraction(0)] * len(fv)
        return out
    return np.zeros(len(fv), dtype=np.int64)


def naive(fv: np.ndarray) -> np.ndarray:
    N = len(fv) - 1
    idx = np.arange(N + 1)
    acc = _zeros(fv)
    for k in range(1, N + 1):
        if fv[k]:
            # q^k / (1 - q^k) as a dense 0/1 vector
            acc = acc + fv[k] * ((idx % k == 0) & (idx > 0))
    return acc


def sieve(fv: np.ndarray) -> np.ndarray:
    N = len(fv) - 1
    acc = _zeros(fv)
    for d in range(1, N + 1):
        if fv[d]:
            acc[d::d] += fv[d]
    return acc


def euler_coefficients(N: int) -> np.ndarray:
    """Coefficients of ``(q;q)_inf`` up to ``q^N``."""
    e = np.zeros(N + 1, dtype=np.int64)
    e[0] = 1
    for sgn, off in _pentagonal_terms(N):
        if off <= N:
            e[off] = -sgn
    return e


def _column(e: np.ndarray, k: int) -> np.ndarray:
    """``col[n] = sum_{j>=1} e[n - jk]``."""
    N = len(e) - 1
    rows = -(-(N + 1) // k)
    padded = np.zeros(rows * k, dtype=np.int64)
    padded[: N + 1] = e
    run = np.cumsum(padded.reshape(rows, k), axis=0).reshape(-1)
    col = np.zeros(N + 1, dtype=np.int64)
    col[k:] = run[: N + 1 - k]
    return col


def pentagonal(fv: np.ndarray) -> np.ndarray:
    N = len(fv) - 1
    e = euler_coefficients(N)
    t = _zeros(fv)
    for k in range(1, N + 1):
        if fv[k]:
            t = t + fv[k] * _column(e, k)
    t = t.tolist()
    c = _zeros(fv).tolist()
    for m in range(1, N + 1):
        s = t[m]
        for sgn, off in _pentagonal_terms(m - 1):
            if m - off >= 1:
                s += sgn * c[m - off]
        c[m] = s
    out = _zeros(fv)
    out[:] = c
    return out


ROUTES = {"naive": naive, "sieve": sieve, "pentagonal": pentagonal}


@dataclass
class BenchRow:
    N: int
    strategy: str
    seconds: Optional[float]
    agree: Optional[bool]

    def row(self) -> dict:
        return {"N": self.N, "strategy": self.strategy, "seconds": self.seconds, "agree": self.agree}


def divisor_sums(f, N: int, strategy: str = "sieve") -> list:
    """``[(f*1)(1), ..., (f*1)(N)]`` by the named route."""
    out = ROUTES[strategy](f_table(f, N))
    return [v if isinstance(v, Fraction) else int(v) for v in out[1:]]


def bench(sizes: Iterable[int], f: Optional[ArithmeticFunction] = None, full: bool = False) -> list[BenchRow]:
    """Time every route for each ``N``; the slow routes are skipped past
    ``SLOW_LIMIT`` unless ``full``.  Raises ``AssertionError`` on disagreement."""
    f = f if f is not None else builtin("id", 1)
    rows = []
    for N in sizes:
        if N < 1:
            raise ValueError("sizes must be >= 1")
        fv = f_table(f, N)
        ref = None
        for name in STRATEGIES:
            if name != "sieve" and N > SLOW_LIMIT and not full:
                rows.append(BenchRow(N, name, None, None))
                continue
            t0 = time.perf_counter()
            out = ROUTES[name](fv)
            dt = time.perf_counter() - t0
            if ref is None:
                ref = out
            same = bool(np.array_equal(out, ref))
            if not same:
                raise AssertionError(f"{name} disagrees with the first route at N={N}")
            rows.append(BenchRow(N, name, dt, same))
    return rows
