"""Factorization theorems for Lambert series.

A factorization writes a Lambert series as ``(1/C(q)) * sum_n (sum_k s[n][k] b(k)) q^n``
for a lower triangular matrix ``s``.  Triangles here are built by exact series
extraction; the partition-counting interpretation is only used as a test oracle.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Optional, Sequence

from .arith import as_function, divisors, partition_p, mobius
from .dirichlet import SequenceWindow, convolve
from .fps import ONE, ZERO, TruncatedSeries, binomial_expansion, normalize, pochhammer


class SingularTriangleError(ArithmeticError):
    """A triangle with a zero diagonal entry cannot be inverted."""


class FactorizationTriangle:
    """Lower triangular matrix ``s[n][k]``, ``1 <= k <= n <= N``, with exact entries."""

    __slots__ = ("_rows", "provenance")

    def __init__(self, rows: Sequence[Sequence], provenance: str = "custom"):
        N = len(rows)
        built = []
        for n, row in enumerate(rows, start=1):
            row = [normalize(x) for x in row]
            if len(row) < n:
                row += [ZERO] * (n - len(row))
            if any(row[n:]):
                raise ValueError(f"row {n} has entries above the diagonal")
            built.append(tuple(row[:n]))
        self._rows = tuple(built)
        self.provenance = provenance

    @property
    def N(self) -> int:
        return len(self._rows)

    def entry(self, n: int, k: int):
        if not (1 <= n <= self.N and k >= 1):
            raise IndexError(f"({n}, {k}) outside triangle of order {self.N}")
        if k > n:
            return ZERO
        return self._rows[n - 1][k - 1]

    def row(self, n: int) -> tuple:
        return self._rows[n - 1]

    def __eq__(self, other) -> bool:
        if isinstance(other, FactorizationTriangle):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"FactorizationTriangle(N={self.N}, provenance={self.provenance!r})"

    def diagonal(self) -> tuple:
        return tuple(r[-1] for r in self._rows)

    def matmul(self, other: "FactorizationTriangle") -> "FactorizationTriangle":
        N = min(self.N, other.N)
        rows = []
        for n in range(1, N + 1):
            a = self._rows[n - 1]
            row = []
            for k in range(1, n + 1):
                s = ZERO
                for j in range(k, n + 1):
                    x = a[j - 1]
                    if x:
                        y = other._rows[j - 1][k - 1]
                        if y:
                            s += x * y
                row.append(s)
            rows.append(row)
        return FactorizationTriangle(rows, "product")

    __matmul__ = matmul

    def is_identity(self) -> bool:
        for n, row in enumerate(self._rows, start=1):
            for k, x in enumerate(row, start=1):
                if x != (ONE if k == n else ZERO):
                    return False
        return True

    def inverse(self) -> "FactorizationTriangle":
        """Exact inverse by forward substitution."""
        N = self.N
        diag = self.diagonal()
        for n, d in enumerate(diag, start=1):
            if not d:
                raise SingularTriangleError(f"zero diagonal entry at n={n} ({self.provenance})")
        inv = [[ZERO] * n for n in range(1, N + 1)]
        for k in range(1, N + 1):
            inv[k - 1][k - 1] = normalize(1 / diag[k - 1])
            for n in range(k + 1, N + 1):
                row = self._rows[n - 1]
                s = ZERO
                for j in range(k, n):
                    if row[j - 1] and inv[j - 1][k - 1]:
                        s += row[j - 1] * inv[j - 1][k - 1]
                inv[n - 1][k - 1] = normalize(-s / diag[n - 1])
        return FactorizationTriangle(inv, f"inverse({self.provenance})")

    def apply(self, values) -> SequenceWindow:
        """``t_n = sum_k s[n][k] v(k)`` for ``n = 1..N``; ``values`` is callable or 1-based window."""
        v = values if callable(values) else (lambda k: values[k])
        vals = [None] + [normalize(v(k)) for k in range(1, self.N + 1)]
        out = []
        for row in self._rows:
            s = ZERO
            for k, x in enumerate(row, start=1):
                if x and vals[k]:
                    s += x * vals[k]
            out.append(s)
        return SequenceWindow(out)


def _prefactor(sign: str, alpha: int, beta: int, N: int) -> TruncatedSeries:
    z = 1 if sign == "minus" else -1
    return pochhammer(alpha - beta, alpha, None, N, z=z)


def _check_ab(alpha: int, beta: int) -> None:
    if not 0 <= beta < alpha:
        raise ValueError(f"need 0 <= beta < alpha, got alpha={alpha}, beta={beta}")


def s_triangle(sign: str, alpha: int, beta: int, N: int, kind: str = "distinct") -> FactorizationTriangle:
    """``s[n][k] = [q^n] P(q) q^e / (1 -/+ q^e)`` with ``e = alpha*k - beta``.

    ``kind="distinct"`` uses ``P = (+-q^(alpha-beta); q^alpha)_inf`` (the series sits
    behind ``1/P``), ``kind="unrestricted"`` uses ``1/P`` (the series sits behind ``P``).
    """
    _check_ab(alpha, beta)
    if sign not in ("minus", "plus"):
        raise ValueError(f"sign must be 'minus' or 'plus', not {sign!r}")
    if kind not in ("distinct", "unrestricted"):
        raise ValueError(f"kind must be 'distinct' or 'unrestricted', not {kind!r}")
    P = _prefactor(sign, alpha, beta, N)
    if kind == "unrestricted":
        P = P.reciprocal()
    z = 1 if sign == "minus" else -1
    cols = []
    for k in range(1, N + 1):
        e = alpha * k - beta
        if e > N:
            cols.append(None)
            continue
        cols.append(P * binomial_expansion(e, 1, N, z=z, shift=e))
    rows = []
    for n in range(1, N + 1):
        rows.append([cols[k - 1][n] if cols[k - 1] is not None else ZERO for k in range(1, n + 1)])
    tag = "classical-" + sign if (alpha, beta, kind) == (1, 0, "distinct") else f"generalized({alpha},{beta},{kind})"
    return FactorizationTriangle(rows, tag)


def s_inverse_closed(N: int) -> FactorizationTriangle:
    """``s^{-1}[n][k] = sum_{d|n} p(d-k) mu(n/d)``."""
    rows = []
    for n in range(1, N + 1):
        row = []
        for k in range(1, n + 1):
            row.append(sum((partition_p(d - k) * mobius(n // d) for d in divisors(n) if d >= k), 0))
        rows.append(row)
    return FactorizationTriangle(rows, "inverse(classical-minus)")


def f_tilde(f, gamma, N: int) -> SequenceWindow:
    """``sum_{d|k} sum_{r|k/d} f(d) gamma(r)``, i.e. ``f * gamma * 1``."""
    return convolve(convolve(f, gamma, N), lambda n: 1, N)


def custom_inverse(C: TruncatedSeries, gamma, N: int) -> FactorizationTriangle:
    """``s^{-1}[n][k](gamma) = sum_{d|n} [q^(d-k)] (1/C) gamma(n/d)``."""
    if not C[0]:
        raise ValueError("C(0) must be nonzero")
    invC = C.truncate(N).reciprocal()
    g = as_function(gamma)
    rows = []
    for n in range(1, N + 1):
        row = []
        for k in range(1, n + 1):
            row.append(sum((invC[d - k] * g(n // d) for d in divisors(n) if d >= k), ZERO))
        rows.append(row)
    return FactorizationTriangle(rows, "custom-inverse")


def custom_pair(C: TruncatedSeries, gamma, N: int) -> tuple[FactorizationTriangle, FactorizationTriangle]:
    """``(inverse, forward)`` for the pair ``(C, gamma)``; the forward triangle is found by inversion.

    Raises ``SingularTriangleError`` when ``gamma(1) = 0``.
    """
    inv = custom_inverse(C, gamma, N)
    fwd = inv.inverse()
    fwd.provenance = "custom"
    return inv, fwd


def factorization_expansion(triangle: FactorizationTriangle, b, C: TruncatedSeries, N: Optional[int] = None,
                            behind: str = "reciprocal") -> TruncatedSeries:
    """``(1/C) * sum_n (sum_k s[n][k] b(k)) q^n`` (or ``C * ...`` with ``behind="product"``)."""
    N = triangle.N if N is None else min(N, triangle.N)
    t = triangle.apply(b)
    T = TruncatedSeries([ZERO] + [t[n] for n in range(1, N + 1)])
    C = C.truncate(N)
    if behind == "reciprocal":
        return T / C
    if behind == "product":
        return T * C
    raise ValueError("behind must be 'reciprocal' or 'product'")


def classical_factorization(f, N: int, sign: str = "minus") -> TruncatedSeries:
    tri = s_triangle(sign, 1, 0, N)
    return factorization_expansion(tri, as_function(f), _prefactor(sign, 1, 0, N))


def generalized_factorization(a, alpha: int, beta: int, N: int, kind: str = "distinct") -> TruncatedSeries:
    """Right side of the generalized factorization with the partition-product prefactor."""
    tri = s_triangle("minus", alpha, beta, N, kind)
    P = _prefactor("minus", alpha, beta, N)
    behind = "reciprocal" if kind == "distinct" else "product"
    return factorization_expansion(tri, as_function(a), P, behind=behind)


def custom_factorization(f, C: TruncatedSeries, gamma, N: int) -> TruncatedSeries:
    """``(1/C) sum_n (sum_k s[n][k](gamma) f~(k)) q^n`` with ``f~ = f * gamma * 1``."""
    _, fwd = custom_pair(C, gamma, N)
    return factorization_expansion(fwd, f_tilde(f, gamma, N), C)


def generalized_abar(a, alpha: int, beta: int, gamma, N: int, reading: str = "printed") -> SequenceWindow:
    """``abar_n = sum_{d|n, d = beta mod alpha} a_{(d-beta)/alpha} gamma~(n/d)``.

    ``reading="printed"`` takes the index formula literally with ``a_0 = 0``;
    ``reading="shifted"`` uses ``d = -beta mod alpha`` and ``a_{(d+beta)/alpha}``,
    matching the exponents ``alpha*n - beta`` of the series being factored.
    """
    _check_ab(alpha, beta)
    a = as_function(a)
    g = as_function(gamma)
    gt = lambda m: sum((g(e) for e in divisors(m)), ZERO)
    out = []
    for n in range(1, N + 1):
        s = ZERO
        for d in divisors(n):
            if reading == "printed":
                if (d - beta) % alpha:
                    continue
                idx = (d - beta) // alpha
            elif reading == "shifted":
                if (d + beta) % alpha:
                    continue
                idx = (d + beta) // alpha
            else:
                raise ValueError(f"unknown reading {reading!r}")
            if idx >= 1:
                s += a(idx) * gt(n // d)
        out.append(s)
    return SequenceWindow(out)


def abar_expansion(a, alpha: int, beta: int, C: TruncatedSeries, gamma, N: int,
                   reading: str = "printed") -> TruncatedSeries:
    """``(1/C) sum_n (sum_k sbar[n][k] abar_k) q^n`` with ``sbar`` the inverse of the closed form."""
    abar = generalized_abar(a, alpha, beta, gamma, N, reading)
    _, fwd = custom_pair(C, gamma, N)
    return factorization_expansion(fwd, abar, C)


def _pentagonal_terms(n: int):
    """``(sign, offset)`` pairs, ``offset = k(3k+b)/2`` for ``b = +-1`` and
    ``1 <= k <= floor((sqrt(24n+1) - b)/6)``, i.e. ``(6k+b)^2 <= 24n+1``."""
    for b in (1, -1):
        k = 1
        while (6 * k + b) ** 2 <= 24 * n + 1:
            yield (-1) ** (k + 1), k * (3 * k + b) // 2
            k += 1


def pentagonal_table(f, N: int) -> list:
    """``[c_0, ..., c_N]`` with ``c_m = (f*1)(m)`` produced by the printed recurrence."""
    f = as_function(f)
    tri = s_triangle("minus", 1, 0, N)
    t = tri.apply(f)
    c = [ZERO] * (N + 1)
    for m in range(1, N + 1):
        n = m - 1
        s = t[m]
        for sgn, off in _pentagonal_terms(n):
            if n + 1 - off >= 1:
                s += sgn * c[n + 1 - off]
        c[m] = normalize(s)
    return c


def pentagonal_recurrence(f, n: int):
    """``(f*1)(n+1)`` from the recurrence, evaluated exactly as printed."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return pentagonal_table(f, n + 1)[n + 1]


def pentagonal_summatory(f, x: int, free_n: Optional[int] = None):
    """``Sigma_f(x+1)`` from the summatory recurrence.

    The recursive arguments are ``x + 1 - k(3k+b)/2``.  Passing ``free_n`` replaces
    ``x`` inside those arguments by a fixed value (the letter shown in print) and
    evaluates the inner sums directly.
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    f = as_function(f)
    N = x + 1
    tri = s_triangle("minus", 1, 0, N)
    t = tri.apply(f)
    memo = {0: ZERO}

    def Sigma(y: int):
        if y <= 0:
            return ZERO
        if free_n is not None:
            return direct_summatory(f, y)
        if y not in memo:
            s = sum((t[m] for m in range(1, y + 1)), ZERO)
            for sgn, off in _pentagonal_terms(y - 1):
                s += sgn * Sigma(y - off)
            memo[y] = normalize(s)
        return memo[y]

    s = sum((t[m] for m in range(1, N + 1)), ZERO)
    base = x if free_n is None else free_n
    for sgn, off in _pentagonal_terms(x):
        s += sgn * Sigma(base + 1 - off)
    return normalize(s)


def direct_summatory(f, x: int):
    """``sum_{d<=x} f(d) floor(x/d)``."""
    f = as_function(f)
    return normalize(sum((f(d) * (x // d) for d in range(1, x + 1)), ZERO))
