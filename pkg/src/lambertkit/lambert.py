"""Lambert series constructors and their divisor-sum coefficient formulas."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .arith import ArithmeticFunction, builtin, divisors, mobius, stirling1, stirling2
from .fps import ONE, ZERO, TruncatedSeries, binomial_expansion, compose_power, normalize


@dataclass(frozen=True)
class LambertSpec:
    """``sum_{n>=t} f(n) q^(m*e_n) / (1 -/+ q^(e_n))^power`` with ``e_n = alpha*n - beta``."""

    f: Callable
    alpha: int = 1
    beta: int = 0
    sign: str = "minus"
    power: int = 1
    m: int = 1
    t: int = 1

    def __post_init__(self):
        if not 0 <= self.beta < self.alpha:
            raise ValueError(f"need 0 <= beta < alpha, got alpha={self.alpha}, beta={self.beta}")
        if self.sign not in ("minus", "plus"):
            raise ValueError(f"sign must be 'minus' or 'plus', not {self.sign!r}")
        if self.power < 1 or self.m < 1 or self.t < 1:
            raise ValueError("power, m and t must all be >= 1")

    @property
    def ratio(self) -> int:
        return 1 if self.sign == "minus" else -1


def series(spec: LambertSpec, N: int) -> TruncatedSeries:
    """Exact expansion to order ``N``, placing the binomial expansion at each term's exponent."""
    base = binomial_expansion(1, spec.power, N, z=spec.ratio, shift=spec.m)
    c = [ZERO] * (N + 1)
    n = spec.t
    while spec.m * (spec.alpha * n - spec.beta) <= N:
        e = spec.alpha * n - spec.beta
        fn = spec.f(n)
        if fn:
            for j in range(spec.m, N // e + 1):
                if base[j]:
                    c[j * e] += fn * base[j]
        n += 1
    return TruncatedSeries(c)


def coefficient(spec: LambertSpec, n: int):
    """``[q^n]`` of the series a LambertSpec describes as a divisor sum, without building the series."""
    if n < 1:
        raise ValueError("coefficient index must be >= 1")
    total = ZERO
    P = spec.power
    for e in divisors(n):
        if (e + spec.beta) % spec.alpha:
            continue
        d = (e + spec.beta) // spec.alpha
        j = n // e - spec.m
        if d < spec.t or j < 0:
            continue
        total += comb(j + P - 1, P - 1) * spec.ratio**j * spec.f(d)
    return normalize(total)


def lambert(f, N: int) -> TruncatedSeries:
    """Classical ``L_f(q)``."""
    return series(LambertSpec(f), N)


def generalized(f, alpha: int, beta: int, N: int) -> TruncatedSeries:
    return series(LambertSpec(f, alpha, beta), N)


def linear_exponent_series(f, a: int, b: int, N: int, sign: int = 1, start: int = 1) -> TruncatedSeries:
    """``sum_{n>=start} f(n) q^(a n + b) / (1 - sign*q^(a n + b))`` for any linear exponent."""
    c = [ZERO] * (N + 1)
    n = start
    while a * n + b <= N:
        e = a * n + b
        if e < 1:
            raise ValueError(f"exponent {e} at n={n} is not positive")
        fn = f(n)
        if fn:
            z = ONE
            for k in range(e, N + 1, e):
                c[k] += fn * z
                z *= sign
        n += 1
    return TruncatedSeries(c)


def fraction_series(f, num: tuple, den: tuple, N: int, sign: int = 1, start: int = 1) -> TruncatedSeries:
    """``sum_{n>=start} f(n) q^(num0 n + num1) / (1 - sign q^(den0 n + den1))``."""
    a, b = num
    c0, c1 = den
    if a < 1:
        raise ValueError("numerator exponent must grow with n")
    out = [ZERO] * (N + 1)
    n = start
    while a * n + b <= N:
        s, e = a * n + b, c0 * n + c1
        if s < 0 or e < 1:
            raise ValueError(f"bad exponents at n={n}: numerator {s}, denominator {e}")
        fn = f(n)
        if fn:
            z = ONE
            for k in range(s, N + 1, e):
                out[k] += fn * z
                z *= sign
        n += 1
    return TruncatedSeries(out)


def modified_h(f) -> ArithmeticFunction:
    """``h`` with ``L_h = L_f(q) - 2 L_f(q^2)``: ``f(n)`` for odd n, ``f(n) - 2 f(n/2)`` for even n."""
    return ArithmeticFunction(lambda n: f(n) if n % 2 else f(n) - 2 * f(n // 2), "modh")


def modified_h_recursive(f) -> ArithmeticFunction:
    """Self-referential reading ``h(n) = f(n) - 2 h(n/2)`` for even ``n``."""

    def h(n):
        return f(n) if n % 2 else f(n) - 2 * h(n // 2)

    return ArithmeticFunction(h, "modh_rec")


def modified(f, N: int) -> TruncatedSeries:
    """``sum f(n) q^n / (1 + q^n)`` built two ways and checked against each other."""
    direct = series(LambertSpec(f, sign="plus"), N)
    lf = lambert(f, N)
    via = lf - 2 * compose_power(lf, 2)
    if direct != via:
        raise RuntimeError("modified Lambert series constructions disagree")
    return direct


def power_argument(f, k: int, N: int) -> TruncatedSeries:
    """``sum f(n) q^(n^k) / (1 - q^(n^k))``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = [ZERO] * (N + 1)
    n = 1
    while n**k <= N:
        e = n**k
        fn = f(n)
        if fn:
            for m in range(e, N + 1, e):
                c[m] += fn
        n += 1
    return TruncatedSeries(c)


def power_divisor_sums(f, k: int, N: int) -> TruncatedSeries:
    """``sum_m (sum_{d^k | m} f(d)) q^m`` by direct enumeration."""
    c = [ZERO] * (N + 1)
    for m in range(1, N + 1):
        d = 1
        while d**k <= m:
            if m % d**k == 0:
                c[m] += f(d)
            d += 1
    return TruncatedSeries(c)


def _signed_s1(j: int, m: int) -> int:
    return (-1) ** (j - m) * stirling1(j, m)


def derivative_expansion(i: int, j: int, N: int) -> TruncatedSeries:
    """``q^j D^j [q^i / (1 - q^i)]`` from its Stirling-number expansion.

    Uses ``q^j D^j = sum_m s(j, m) theta^m`` (``theta = q d/dq``, signed
    first-kind Stirling numbers) and ``theta^m x/(1-x) = sum_k S(m, k) k! x^k/(1-x)^(k+1)``.
    The result is checked against direct formal differentiation.
    """
    if i < 1 or j < 1:
        raise ValueError("i and j must be >= 1")
    out = TruncatedSeries.zero(N)
    for m in range(j + 1):
        w = _signed_s1(j, m) * i**m
        if not w:
            continue
        for k in range(m + 1):
            s2 = stirling2(m, k)
            if s2:
                term = binomial_expansion(i, k + 1, N, shift=i * k)
                out = out + term * (w * s2 * _factorial(k))
    direct = TruncatedSeries.geometric(i, N, numerator_shift=i).q_derivative_power(j)
    if out != direct:
        raise RuntimeError(f"Stirling derivative expansion disagrees for i={i}, j={j}")
    return out


def printed_derivative_form(i: int, j: int, N: int, variant: int = 1) -> TruncatedSeries:
    """The two displayed Stirling double/triple sums, evaluated literally.

    ``variant=1``: ``sum_m sum_k [j m] {m k} (-1)^(j-k) k! i^m / (1-q^i)^(k+1)``.
    ``variant=2``: ``sum_r [sum_m sum_k [j m] {m k} C(j-k, r) (-1)^(j-k-r) k! i^m / (1-q^i)^(k+1)] q^((r+1) i)``.
    ``variant=3``: as ``variant=2`` with the common denominator ``(1-q^i)^(j+1)``.
    """
    out = TruncatedSeries.zero(N)
    for m in range(j + 1):
        for k in range(m + 1):
            w = stirling1(j, m) * stirling2(m, k) * _factorial(k) * i**m
            if not w:
                continue
            inv = binomial_expansion(i, k + 1, N)
            if variant == 1:
                out = out + inv * ((-1) ** (j - k) * w)
            elif variant in (2, 3):
                if variant == 3:
                    inv = binomial_expansion(i, j + 1, N)
                for r in range(j + 1):
                    b = comb(j - k, r) if j - k >= 0 else 0
                    if b:
                        out = out + inv.shift((r + 1) * i) * ((-1) ** (j - k - r) * b * w)
            else:
                raise ValueError("variant must be 1, 2 or 3")
    return out


def _factorial(k: int) -> int:
    out = 1
    for x in range(2, k + 1):
        out *= x
    return out


def dilation_sum(f, inner: TruncatedSeries, N: int, scale: int = 1) -> TruncatedSeries:
    """``sum_{n>=1} f(n) * inner(q^(scale*n))``; ``inner`` must vanish at ``q = 0``."""
    if inner[0]:
        raise ValueError("inner series must have zero constant term")
    N = min(N, inner.order)
    c = [ZERO] * (N + 1)
    n = 1
    while scale * n <= N:
        fn = f(n)
        if fn:
            e = scale * n
            for k in range(1, N // e + 1):
                if inner[k]:
                    c[k * e] += fn * inner[k]
        n += 1
    return TruncatedSeries(c)


def ogf(f, N: int, start: int = 1) -> TruncatedSeries:
    return TruncatedSeries.from_function(f, N, start)


def ogf_from_lambert(f, N: int) -> TruncatedSeries:
    """``sum mu(n) L_f(q^n)``; equals the OGF of ``f``."""
    return dilation_sum(mobius, lambert(f, N), N)


def summatory_ogf(f, N: int) -> TruncatedSeries:
    """``sum mu(n) L_f(q^n) / (1 - q)``; equals ``sum F(n) q^n``."""
    return ogf_from_lambert(f, N) / (1 - TruncatedSeries.monomial(1, N))


def convolution_double_sum(f, g, N: int) -> TruncatedSeries:
    """``sum f(n) L_g(q^n)``."""
    return dilation_sum(f, lambert(g, N), N)


def modified_convolution_double_sum(f, g, N: int) -> TruncatedSeries:
    """``sum f(n) [L_g(q^n) - 2 L_g(q^(2n))]``."""
    lg = lambert(g, N)
    return dilation_sum(f, lg - 2 * compose_power(lg, 2), N)


def stirling_lambert(f, k: int, N: int) -> TruncatedSeries:
    """``sum_j S(k, j) j! sum_m f(m) q^(m j) / (1 - q^m)^(j+1)``; the ``j = 0`` term needs ``S(k, 0) = 0``."""
    out = TruncatedSeries.zero(N)
    for j in range(k + 1):
        s = stirling2(k, j)
        if not s:
            continue
        if j == 0:
            raise ValueError("j = 0 term has no positive-exponent reading")
        out = out + series(LambertSpec(f, power=j + 1, m=j), N) * (s * _factorial(j))
    return out


def stirling_lambert_printed_coefficients(f, k: int, N: int, corrected: bool = False) -> TruncatedSeries:
    """Second displayed form: ``sum_j S(k,j) j! sum_n sum_{d | floor(n/j)} f(d) C(floor(n/j)/d + j, j) q^n``.

    ``corrected`` uses the exact expansion ``sum_{d | n} f(d) C(n/d, j)`` instead.
    """
    c = [ZERO] * (N + 1)
    for j in range(k + 1):
        s = stirling2(k, j)
        if not s:
            continue
        w = s * _factorial(j)
        for n in range(1, N + 1):
            if corrected:
                c[n] += w * sum((f(d) * comb(n // d, j) for d in divisors(n)), ZERO)
                continue
            fl = n // j
            if fl < 1:
                continue
            c[n] += w * sum((f(d) * comb(fl // d + j, j) for d in divisors(fl)), ZERO)
    return TruncatedSeries(c)


def ramanujan_nested_sum(N: int) -> TruncatedSeries:
    """``sum_n q^n / (1-q^n)^2 * sum_{k<=n} 1/(1-q^k)``."""
    out = TruncatedSeries.zero(N)
    inner = TruncatedSeries.constant(0, N)
    for n in range(1, N + 1):
        inner = inner + TruncatedSeries.geometric(n, N)
        out = out + binomial_expansion(n, 2, N, shift=n) * inner
    return out


def pow_sum(k: int, N: int, start: int = 1) -> TruncatedSeries:
    """``sum_{m>=start} q^(m^k)``."""
    c = [ZERO] * (N + 1)
    m = start
    while m**k <= N:
        c[m**k] += ONE
        m += 1
    return TruncatedSeries(c)


def powers_of(a: int, N: int) -> TruncatedSeries:
    """``sum_{n>=0} q^(a^n)``."""
    c = [ZERO] * (N + 1)
    x = 1
    while x <= N:
        c[x] += ONE
        if a == 1:
            break
        x *= a
    return TruncatedSeries(c)


def one():
    return builtin("one")
