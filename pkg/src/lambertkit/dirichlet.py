"""Dirichlet convolution algebra over finite windows ``1..N``."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from .arith import ArithmeticFunction, bigomega, divisors
from .fps import ZERO, normalize


class SequenceWindow:
    """Values of an arithmetic function on ``1..N``; indexing is 1-based."""

    __slots__ = ("_v",)

    def __init__(self, values: Iterable):
        self._v = tuple(normalize(x) for x in values)

    @property
    def N(self) -> int:
        return len(self._v)

    def __len__(self) -> int:
        return len(self._v)

    def __getitem__(self, n: int):
        if not 1 <= n <= len(self._v):
            raise IndexError(f"index {n} outside window 1..{len(self._v)}")
        return self._v[n - 1]

    def __call__(self, n: int):
        return self[n]

    def __iter__(self):
        return iter(self._v)

    def __eq__(self, other) -> bool:
        if isinstance(other, SequenceWindow):
            return self._v == other._v
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._v)

    def __repr__(self) -> str:
        head = ", ".join(str(x) for x in self._v[:8])
        return f"SequenceWindow([{head}{', ...' if len(self._v) > 8 else ''}], N={len(self._v)})"

    @property
    def values(self) -> tuple:
        return self._v

    def first_mismatch(self, other: "SequenceWindow") -> Optional[int]:
        for n, (x, y) in enumerate(zip(self._v, other._v), start=1):
            if x != y:
                return n
        return None

    def as_function(self) -> ArithmeticFunction:
        return ArithmeticFunction(self.__getitem__, "window")


def _table(f, N: int) -> list:
    """``[None, f(1), ..., f(N)]``."""
    if isinstance(f, SequenceWindow):
        if f.N < N:
            raise ValueError(f"window of length {f.N} is shorter than {N}")
        return [None] + list(f.values[:N])
    return [None] + [normalize(f(n)) for n in range(1, N + 1)]


def convolve(f, g, N: int) -> SequenceWindow:
    """``(f * g)(n) = sum_{d|n} f(d) g(n/d)`` for ``n <= N`` by iterating multiples."""
    F = _table(f, N)
    G = _table(g, N)
    H = [ZERO] * (N + 1)
    for d in range(1, N + 1):
        fd = F[d]
        if not fd:
            continue
        for k in range(1, N // d + 1):
            gk = G[k]
            if gk:
                H[d * k] += fd * gk
    return SequenceWindow(H[1:])


def eps_window(N: int) -> SequenceWindow:
    return SequenceWindow([1] + [0] * (N - 1))


def inverse_recursive(f, N: int) -> SequenceWindow:
    """Dirichlet inverse from the defining recursion."""
    F = _table(f, N)
    f1 = F[1]
    if not f1:
        raise ZeroDivisionError("f(1) = 0: not Dirichlet invertible")
    inv1 = 1 / f1
    H = [ZERO] * (N + 1)
    acc = [ZERO] * (N + 1)
    H[1] = normalize(inv1)
    for n in range(1, N + 1):
        if n > 1:
            H[n] = normalize(-acc[n] * inv1)
        hn = H[n]
        if not hn:
            continue
        for d in range(2, N // n + 1):
            if F[d]:
                acc[d * n] += F[d] * hn
    return SequenceWindow(H[1:])


def kfold(f, j: int, N: int) -> SequenceWindow:
    """``j``-fold Dirichlet power; ``kfold(f, 0) = eps``."""
    if j < 0:
        raise ValueError("j must be >= 0")
    out = eps_window(N)
    base = SequenceWindow(_table(f, N)[1:])
    for _ in range(j):
        out = convolve(base, out, N)
    return out


def inverse_mousavi(f, N: int, include_boundary: bool = False) -> SequenceWindow:
    """``sum_{j=1}^{Omega(n)} (-1)^j (f - f(1) eps)_{*j}(n) / f(1)^{j+1}``.

    With ``include_boundary`` the ``j = 0`` term (``eps / f(1)``) is added.
    """
    F = _table(f, N)
    f1 = F[1]
    g = SequenceWindow([ZERO] + F[2:])
    jmax = max(bigomega(n) for n in range(1, N + 1))
    powers = [eps_window(N)]
    for _ in range(jmax):
        powers.append(convolve(g, powers[-1], N))
    out = []
    for n in range(1, N + 1):
        start = 0 if include_boundary else 1
        s = sum(((-1) ** j * powers[j][n] / f1 ** (j + 1) for j in range(start, bigomega(n) + 1)), ZERO)
        out.append(s)
    return SequenceWindow(out)


def inverse_binomial(f, N: int, shifted: bool = False, include_boundary: bool = False) -> SequenceWindow:
    """``sum_{j=1}^{Omega(n)} C(Omega(n), j) (-1)^j f_{*j}(n) / f(1)^{j+1}``.

    ``shifted`` uses ``C(Omega(n)+1, j+1)``; ``include_boundary`` sets the
    value at ``n = 1`` to ``1/f(1)``.
    """
    F = _table(f, N)
    f1 = F[1]
    jmax = max(bigomega(n) for n in range(1, N + 1))
    base = SequenceWindow(F[1:])
    powers = [eps_window(N)]
    for _ in range(jmax):
        powers.append(convolve(base, powers[-1], N))
    out = []
    for n in range(1, N + 1):
        w = bigomega(n)
        s = ZERO
        for j in range(1, w + 1):
            c = comb(w + 1, j + 1) if shifted else comb(w, j)
            s += c * (-1) ** j * powers[j][n] / f1 ** (j + 1)
        if n == 1 and include_boundary:
            s = 1 / f1
        out.append(s)
    return SequenceWindow(out)


def inverse_closed_forms(f, N: int) -> tuple[SequenceWindow, SequenceWindow, dict]:
    """Evaluate both printed closed-form inverses and compare them with the recursion.

    Returns ``(mousavi, binomial, adjudication)``; the adjudication maps each
    formula name to its first mismatching ``n`` (``None`` when it matches).
    """
    truth = inverse_recursive(f, N)
    w1 = inverse_mousavi(f, N)
    w2 = inverse_binomial(f, N)
    verdict = {
        "mousavi": truth.first_mismatch(w1),
        "binomial": truth.first_mismatch(w2),
        "mousavi_with_boundary": truth.first_mismatch(inverse_mousavi(f, N, include_boundary=True)),
        "binomial_shifted_with_boundary": truth.first_mismatch(
            inverse_binomial(f, N, shifted=True, include_boundary=True)
        ),
    }
    return w1, w2, verdict


def summatory(f, x: int):
    """``F(x) = sum_{n <= x} f(n)``."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return normalize(sum((f(n) for n in range(1, x + 1)), ZERO))


def sigma_f(f, x: int):
    """``sum_{n<=x} (f*1)(n)``, cross-checked against ``sum_{d<=x} f(d) floor(x/d)``."""
    if x < 1:
        raise ValueError("x must be >= 1")
    direct = sum(convolve(f, lambda n: 1, x).values, ZERO)
    hyperbola = sum((f(d) * (x // d) for d in range(1, x + 1)), ZERO)
    if direct != hyperbola:
        raise RuntimeError(f"sigma_f mismatch at x={x}: {direct} != {hyperbola}")
    return normalize(direct)


def divisor_sum(f, n: int):
    """``(f * 1)(n)`` for a single ``n``."""
    return normalize(sum((f(d) for d in divisors(n)), ZERO))


def window_function(values: Sequence) -> ArithmeticFunction:
    return SequenceWindow(values).as_function()
