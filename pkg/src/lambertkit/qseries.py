"""Theta functions, partition products and sixth-order mock theta series.

Everything stays in the ring of formal power series: ``theta2`` only appears squared
with an even argument scale, and bilateral terms with negative exponents are
rewritten by clearing the smallest power of ``q`` from their denominators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .arith import partition_p, r2
from .fps import (ONE, ZERO, DomainError, TruncatedSeries, exp_series, log_series, normalize,
                  pochhammer)


def theta(kind: int, N: int) -> TruncatedSeries:
    """``theta3 = 1 + 2 sum q^(n^2)`` and ``theta4 = 1 + 2 sum (-1)^n q^(n^2)``."""
    if kind not in (3, 4):
        raise DomainError("theta(kind) is built for kind 3 or 4; use theta2_squared for kind 2")
    c = [ZERO] * (N + 1)
    c[0] = ONE
    n = 1
    while n * n <= N:
        c[n * n] += 2 if kind == 3 or n % 2 == 0 else -2
        n += 1
    return TruncatedSeries(c)


def theta2_squared(k: int, N: int) -> TruncatedSeries:
    """``theta2(q^k)^2 = 4 q^(k/2) (sum_{n>=0} q^(k n(n+1)))^2`` for even ``k``.

    For odd ``k`` the exponents are half-integers and no power series exists.
    """
    if k < 1:
        raise DomainError("theta2 argument scale must be positive")
    if k % 2:
        raise DomainError(f"theta2(q^{k})^2 has half-integer exponents", at=Fraction(k, 2))
    c = [ZERO] * (N + 1)
    n = 0
    while k * n * (n + 1) <= N:
        c[k * n * (n + 1)] = ONE
        n += 1
    s = TruncatedSeries(c)
    return (s * s).shift(k // 2) * 4


def lattice_r2(n: int) -> int:
    """``#{(x, y) : x^2 + y^2 = n}`` by direct enumeration."""
    count = 0
    x = 0
    while x * x <= n:
        rest = n - x * x
        y = int(rest**0.5)
        while y * y > rest:
            y -= 1
        while (y + 1) ** 2 <= rest:
            y += 1
        if y * y == rest:
            count += (1 if x == 0 else 2) * (1 if y == 0 else 2)
        x += 1
    return count


def theta_identity_checks(N: int) -> dict:
    """First mismatch (``None`` for agreement) of the classical theta identities to order ``N``."""
    from .lambert import fraction_series, lambert

    one = lambda n: 1
    alt4 = lambda n: 4 * (-1) ** (n + 1)
    t3sq = theta(3, N) ** 2
    L1 = lambert(one, N)
    r2s = TruncatedSeries([ZERO] + [r2(m) for m in range(1, N + 1)])
    return {
        "r2": fraction_series(alt4, (2, 1), (2, 1), N).first_difference(r2s),
        "r2_from_zero": fraction_series(alt4, (2, -1), (2, -1), N).first_difference(r2s),
        "theta3": fraction_series(one, (1, 0), (2, 0), N, sign=-1).first_difference((t3sq - 1) / 4),
        "theta2": fraction_series(one, (2, 1), (4, 2), N, sign=-1).first_difference(theta2_squared(2, N) / 4),
        "theta2_from_zero": fraction_series(one, (2, 1), (4, 2), N, sign=-1, start=0).first_difference(
            theta2_squared(2, N) / 4),
        "L1_diff": fraction_series(one, (1, 0), (2, 0), N).first_difference(L1 - L1.compose_power(2)),
        "L1_second_diff": fraction_series(one, (2, 1), (4, 2), N).first_difference(
            L1 - L1.compose_power(2) * 2 + L1.compose_power(4)),
        "L1_second_diff_from_zero": fraction_series(one, (2, 1), (4, 2), N, start=0).first_difference(
            L1 - L1.compose_power(2) * 2 + L1.compose_power(4)),
    }


# partition products

def partition_product_relation(N: int) -> dict:
    """``exp(sum log 1/(1-q^n)) = 1/(q;q)_inf`` and ``exp(sum log(1+q^n)) = (-q;q)_inf``."""
    from .fps import binomial_expansion

    lg1 = TruncatedSeries.zero(N)
    lg2 = TruncatedSeries.zero(N)
    for n in range(1, N + 1):
        lg1 = lg1 - log_series(TruncatedSeries.constant(1, N) - TruncatedSeries.monomial(n, N))
        lg2 = lg2 + log_series(TruncatedSeries.constant(1, N) + TruncatedSeries.monomial(n, N))
    e1, e2 = exp_series(lg1), exp_series(lg2)
    return {
        "unrestricted": e1.first_difference(pochhammer(1, 1, None, N).reciprocal()),
        "distinct": e2.first_difference(pochhammer(1, 1, None, N, z=-1)),
        "partition_numbers": [e1[n] == partition_p(n) for n in range(N + 1)].count(False) == 0,
    }


# bilateral sums

@dataclass(frozen=True)
class BilateralSpec:
    """``sum_r sign(r) q^(num(r)) / sum_i c_i q^(e_i(r))``.

    ``den`` lists ``(c_i, (a_i, b_i))`` with ``e_i(r) = a_i r + b_i``.
    """

    num: Callable[[int], object]
    den: Sequence[tuple]
    sign: Callable[[int], int] = lambda r: 1

    def term(self, r: int, N: int) -> Optional[TruncatedSeries]:
        """Exact expansion of the ``r``-th term, or ``None`` when it starts beyond ``q^N``."""
        A = Fraction(self.num(r))
        if A.denominator != 1:
            raise DomainError(f"non-integral exponent {A} at r={r}", at=A)
        exps = [a * r + b for _, (a, b) in self.den]
        emin = min(exps)
        lead = self.lead(r)
        if lead > N:
            return None
        c = [ZERO] * (N + 1)
        for (ci, _), e in zip(self.den, exps):
            if e - emin <= N:
                c[e - emin] += ci
        if not c[0]:
            raise DomainError(f"denominator vanishes at q=0 for r={r}")
        body = TruncatedSeries.monomial(int(A) - emin, N, self.sign(r)) if lead >= 0 else None
        if body is None:
            raise DomainError(f"negative leading exponent {lead} at r={r}")
        return body / TruncatedSeries(c)

    def lead(self, r: int) -> Fraction:
        return Fraction(self.num(r)) - min(a * r + b for _, (a, b) in self.den)

    def window(self, N: int) -> tuple[int, int]:
        """Smallest ``(lo, hi)`` outside of which every term starts beyond ``q^N``."""
        def edge(step: int) -> int:
            r = 0
            while True:
                nxt = r + step
                if self.lead(nxt) > N and self.lead(nxt + step) >= self.lead(nxt):
                    return r
                r = nxt
        return edge(-1), edge(1)

    def expand(self, N: int, window: Optional[tuple[int, int]] = None) -> TruncatedSeries:
        lo, hi = self.window(N) if window is None else window
        out = TruncatedSeries.zero(N)
        for r in range(lo, hi + 1):
            t = self.term(r, N)
            if t is not None:
                out = out + t
        return out


def _J(a: int, m: int, N: int) -> TruncatedSeries:
    """``J_{a,m} = (q^a, q^(m-a), q^m; q^m)_inf``."""
    return pochhammer(a, m, None, N) * pochhammer(m - a, m, None, N) * pochhammer(m, m, None, N)


def _neg_q(n: int, N: int) -> TruncatedSeries:
    """``(-q)_n = (-q; q)_n``."""
    return pochhammer(1, 1, n, N, z=-1)


MOCK_NAMES = ("phi", "psi", "rho", "sigma", "gamma")


def _mock_term(name: str, n: int, N: int, variant: str) -> Optional[TruncatedSeries]:
    if name == "phi":
        e = n * n
        num, den = pochhammer(1, 2, n, N), _neg_q(2 * n, N)
        s = (-1) ** n
    elif name == "psi":
        e = (n + 1) ** 2
        num, den = pochhammer(1, 2, n, N), _neg_q(2 * n + 1, N)
        s = (-1) ** n
    elif name == "rho":
        e = Fraction(n * (n + 1), 2)
        num, den = _neg_q(n, N), pochhammer(1, 2, n + 1, N)
        s = 1
    elif name == "sigma":
        e = Fraction(n * (n + 2), 2) if variant == "printed" else Fraction((n + 1) * (n + 2), 2)
        num, den = _neg_q(n, N), pochhammer(1, 2, n + 1, N)
        s = 1
    elif name == "gamma":
        e = n * n
        num, den = pochhammer(1, 1, n, N), pochhammer(3, 3, n, N)
        s = 1
    else:
        raise ValueError(f"unknown mock theta function {name!r}")
    e = Fraction(e)
    if e.denominator != 1:
        raise DomainError(f"non-integral exponent {e} at n={n}", at=e)
    if e > N:
        return None
    return (num / den).shift(int(e)) * s


def mock_eulerian(name: str, N: int, variant: str = "printed") -> TruncatedSeries:
    """The ``sum_{n>=0}`` side; ``variant="shifted"`` uses ``(n+1)(n+2)/2`` for sigma."""
    out = TruncatedSeries.zero(N)
    n = 0
    while True:
        t = _mock_term(name, n, N, variant)
        if t is None:
            return out
        out = out + t
        n += 1


def mock_bilateral_spec(name: str, variant: str = "printed") -> tuple[BilateralSpec, Callable]:
    """``(spec, prefactor)`` for the bilateral side; ``variant="alternating"`` inserts ``(-1)^r``."""
    alt = (lambda r: -1 if r % 2 else 1)
    plain = (lambda r: 1)
    if name == "phi":
        spec = BilateralSpec(lambda r: Fraction(r * (3 * r + 1), 2), [(1, (0, 0)), (1, (3, 0))],
                             alt if variant == "alternating" else plain)
        pre = lambda N: _J(1, 3, N).reciprocal() * 2
    elif name == "psi":
        spec = BilateralSpec(lambda r: Fraction(r * (3 * r + 1), 2), [(1, (0, 0)), (1, (3, 1))],
                             alt if variant == "alternating" else plain)
        pre = lambda N: _J(1, 3, N).reciprocal() * 2
    elif name == "rho":
        spec = BilateralSpec(lambda r: r * (3 * r + 4), [(1, (0, 0)), (-1, (6, 1))],
                             plain if variant == "alternating" else alt)
        pre = lambda N: _J(1, 6, N).reciprocal()
    elif name == "sigma":
        spec = BilateralSpec(lambda r: (r + 1) * (3 * r + 1), [(1, (0, 0)), (-1, (6, 3))],
                             plain if variant == "alternating" else alt)
        pre = lambda N: _J(1, 6, N).reciprocal()
    elif name == "gamma":
        spec = BilateralSpec(lambda r: Fraction(r * (3 * r + 1), 2), [(1, (0, 0)), (1, (1, 0)), (1, (2, 0))],
                             plain if variant == "alternating" else alt)
        pre = lambda N: pochhammer(1, 1, None, N).reciprocal()
    else:
        raise ValueError(f"unknown mock theta function {name!r}")
    return spec, pre


def mock_bilateral(name: str, N: int, variant: str = "printed",
                   window: Optional[tuple[int, int]] = None) -> TruncatedSeries:
    spec, pre = mock_bilateral_spec(name, variant)
    return pre(N) * spec.expand(N, window)


def mock_theta(name: str, N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``(Eulerian side, bilateral side)`` as printed."""
    if N > 60:
        raise ValueError("mock theta expansions are limited to order 60")
    return mock_eulerian(name, N), mock_bilateral(name, N)


def _poch0(start: int, step: int, z: int, N: int) -> TruncatedSeries:
    """``prod_{j>=0} (1 - z q^(start + step j))`` allowing ``start = 0``."""
    if start == 0:
        return pochhammer(step, step, None, N, z=z) * (1 - z)
    return pochhammer(start, step, None, N, z=z)


def appell_lerch(x: tuple, z: tuple, N: int, base: int = 3) -> TruncatedSeries:
    """``m(x, Q, z) = (1/j(z; Q)) sum_r (-1)^r Q^(r(r-1)/2) z^r / (1 - Q^(r-1) x z)`` with ``Q = q^base``.

    ``x`` and ``z`` are ``(sign, exponent)`` pairs standing for ``sign * q^exponent``.
    """
    ex, t = x
    ez, s = z
    if not 0 <= s < base or (s == 0 and ez == 1):
        raise DomainError("j(z; Q) must be a unit power series")
    spec = BilateralSpec(lambda r: Fraction(base * r * (r - 1), 2) + s * r,
                         [(1, (0, 0)), (-ex * ez, (base, t + s - base))],
                         lambda r: (-ez) if r % 2 else 1)
    j = _poch0(s, base, ez, N) * _poch0(base - s, base, ez, N) * pochhammer(base, base, None, N)
    return spec.expand(N) / j
