"""Specialized divisor sums: Ramanujan-sum coefficient formulas, Anderson-Apostol
sums, GCD and LCM transforms, Hadamard products and prime-log divisor sums.

Root-of-unity averages ``(1/d) sum_m F(w_d^m q)`` are realized exactly as the
residue-0 multisection of ``F``; complex arithmetic only appears in the Fourier
reconstruction, which is a floating-point check by nature.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Optional

from .arith import (ArithmeticFunction, as_function, bernoulli, builtin, divisors, factor, mobius,
                    omega, ramanujan_c, ramanujan_tau, sigma, totient)
from .dirichlet import convolve, inverse_recursive
from .fps import ONE, ZERO, TruncatedSeries, binomial_expansion, multisect, normalize
from .lambert import LambertSpec, lambert, series


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# cyclotomic logarithmic derivatives and Ramanujan sums

def cyclotomic_phi_tilde(n: int, N: int) -> TruncatedSeries:
    """``sum_{d|n} d mu(n/d) / (1 - q^d)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = TruncatedSeries.zero(N)
    for d in divisors(n):
        m = mobius(n // d)
        if m:
            out = out + binomial_expansion(d, 1, N) * (d * m)
    return out


def phi_tilde_reconstruction(n: int, N: int) -> TruncatedSeries:
    """``(1/n) sum_{d|n} Phi~_d(q)``, which should equal ``1/(1 - q^n)``."""
    out = TruncatedSeries.zero(N)
    for d in divisors(n):
        out = out + cyclotomic_phi_tilde(d, N)
    return out * Fraction(1, n)


def ramanujan_coefficient_formula(f, x: int):
    """``sum_{n<=x} (f(n)/n) sum_{d|n} c_d(x)``."""
    if x < 1:
        raise ValueError("x must be >= 1")
    f = as_function(f)
    total = ZERO
    for n in range(1, x + 1):
        fn = f(n)
        if fn:
            total += fn * Fraction(sum(ramanujan_c(d, x) for d in divisors(n)), n)
    return normalize(total)


def ramanujan_coefficient_middle(f, x: int):
    """``sum_{d<=x} c_d(x) sum_{n <= x/d} f(nd)/(nd)``."""
    f = as_function(f)
    total = ZERO
    for d in range(1, x + 1):
        c = ramanujan_c(d, x)
        if c:
            total += c * sum((f(n * d) * Fraction(1, n * d) for n in range(1, x // d + 1)), ZERO)
    return normalize(total)


# Anderson-Apostol sums

@dataclass(frozen=True)
class ApostolSpec:
    variant: str
    f: Callable
    g: Callable
    m: int

    def __post_init__(self):
        if self.variant not in ("S1", "S2"):
            raise ValueError("variant must be 'S1' or 'S2'")
        if self.m < 1:
            raise ValueError("m must be >= 1")


def apostol_sum(spec: ApostolSpec, n: int):
    """``S1: sum_{d|(m,n)} f(d) g(m/d)``; ``S2: sum_{d|(m,n)} f(d) g(mn/d^2)``."""
    m = spec.m
    total = ZERO
    for d in divisors(gcd(m, n)):
        if spec.variant == "S1":
            total += spec.f(d) * spec.g(m // d)
        else:
            total += spec.f(d) * spec.g(m * n // (d * d))
    return normalize(total)


def apostol_function(spec: ApostolSpec) -> ArithmeticFunction:
    return ArithmeticFunction(lambda n: apostol_sum(spec, n), f"{spec.variant}[m={spec.m}]")


def apostol_s1_rhs(f, g, m: int, N: int) -> TruncatedSeries:
    """``sum_n (f*g*1)(gcd(m, n)) q^n``."""
    fg1 = convolve(convolve(f, g, m), lambda n: 1, m)
    return TruncatedSeries([ZERO] + [fg1[gcd(m, n)] for n in range(1, N + 1)])


def apostol_s2_rhs(f, g, a: int, N: int, corrected: bool = False) -> TruncatedSeries:
    """``sum_m (sum_{d|(a,m)} sum_{r|m/d} f(d) g(a r)) q^m``; ``corrected`` uses ``g(a r / d)``."""
    c = [ZERO]
    for m in range(1, N + 1):
        s = ZERO
        for d in divisors(gcd(a, m)):
            fd = f(d)
            if not fd:
                continue
            for r in divisors(m // d):
                s += fd * (g(a * r // d) if corrected else g(a * r))
        c.append(s)
    return TruncatedSeries(c)


def apostol_lambert_check(spec: ApostolSpec, N: int) -> dict:
    """Both sides of the Lambert identity for ``spec``; ``mismatch`` is the first differing index."""
    lhs = lambert(apostol_function(spec), N)
    if spec.variant == "S1":
        rhs = apostol_s1_rhs(spec.f, spec.g, spec.m, N)
    else:
        rhs = apostol_s2_rhs(spec.f, spec.g, spec.m, N)
    return {"lhs": lhs, "rhs": rhs, "mismatch": lhs.first_difference(rhs)}


def apostol_fourier(spec: ApostolSpec, reading: str = "printed") -> list:
    """Coefficients ``[a_1, ..., a_m]`` of the finite Fourier expansion of ``S1``.

    ``printed``: every term uses ``a_m`` with ``a_k = sum_{d|(m,k)} g(d) f(k/d) d/k``;
    ``indexed``: the same formula with ``a_k`` in the ``k``-th term;
    ``modulus``: ``a_k = sum_{d|(m,k)} g(d) f(m/d) d/m``.
    """
    m = spec.m
    f, g = spec.f, spec.g

    def a(k: int, top: int):
        return normalize(sum((g(d) * f(top // d) * Fraction(d, top) for d in divisors(gcd(m, k))), ZERO))

    if reading == "printed":
        return [a(m, m)] * m
    if reading == "indexed":
        return [a(k, k) for k in range(1, m + 1)]
    if reading == "modulus":
        return [a(k, m) for k in range(1, m + 1)]
    raise ValueError(f"unknown reading {reading!r}")


def fourier_reconstruction_error(spec: ApostolSpec, reading: str = "printed") -> float:
    """Largest ``|S1(n) - sum_k a_k e^(2 pi i k n/m)|`` over ``n = 1..3m``."""
    coeffs = apostol_fourier(spec, reading)
    m = spec.m
    worst = 0.0
    for n in range(1, 3 * m + 1):
        z = sum(float(c) * cmath.exp(2j * cmath.pi * k * n / m) for k, c in enumerate(coeffs, start=1))
        worst = max(worst, abs(z - float(apostol_sum(spec, n))))
    return worst


def hecke_sigma_check(alpha: int, M: int) -> Optional[tuple]:
    """First ``(m, n)`` with ``sigma_a(m) sigma_a(n) != sum_{d|(m,n)} d^a sigma_a(mn/d^2)``."""
    for m in range(1, M + 1):
        for n in range(1, M + 1):
            rhs = sum(d**alpha * sigma(alpha, m * n // (d * d)) for d in divisors(gcd(m, n)))
            if sigma(alpha, m) * sigma(alpha, n) != rhs:
                return (m, n)
    return None


def hecke_tau_check(M: int) -> Optional[tuple]:
    for m in range(1, M + 1):
        for n in range(1, M + 1):
            rhs = sum(d**11 * ramanujan_tau(m * n // (d * d)) for d in divisors(gcd(m, n)))
            if ramanujan_tau(m) * ramanujan_tau(n) != rhs:
                return (m, n)
    return None


def completely_multiplicative_check(f, g, M: int) -> Optional[tuple]:
    """First ``(m, n)`` violating ``f(m) f(n) = sum_{d|(m,n)} g(d) f(mn/d^2)``."""
    for m in range(1, M + 1):
        for n in range(1, M + 1):
            rhs = sum((g(d) * f(m * n // (d * d)) for d in divisors(gcd(m, n))), ZERO)
            if f(m) * f(n) != rhs:
                return (m, n)
    return None


# GCD transforms

def coprime_sum(f) -> ArithmeticFunction:
    """``n -> sum_{d<=n, (d,n)=1} f(d)``."""
    f = as_function(f)
    return ArithmeticFunction(lambda n: sum((f(d) for d in range(1, n + 1) if gcd(d, n) == 1), ZERO),
                              "coprimesum")


def gcd_restricted_sum(f, m: int) -> ArithmeticFunction:
    """``n -> sum_{d<=n, (d,n)=m} f(d)``."""
    f = as_function(f)
    return ArithmeticFunction(lambda n: sum((f(d) for d in range(1, n + 1) if gcd(d, n) == m), ZERO),
                              f"gcdeq{m}")


def gcd_sum(f) -> ArithmeticFunction:
    """``n -> sum_{d<=n} f(gcd(d, n))``."""
    f = as_function(f)
    return ArithmeticFunction(lambda n: sum((f(gcd(d, n)) for d in range(1, n + 1)), ZERO), "gcdsum")


def mobius_denominator_series(f, N: int, m: int = 1, scale: int = 1) -> TruncatedSeries:
    """``sum_k (sum_{d|k} mu(d)/(1 - q^(m d))) f(scale k) q^(scale k)``."""
    f = as_function(f)
    out = [ZERO] * (N + 1)
    k = 1
    while scale * k <= N:
        fk = f(scale * k)
        if fk:
            e0 = scale * k
            for d in divisors(k):
                mu = mobius(d)
                if mu:
                    for e in range(e0, N + 1, m * d):
                        out[e] += mu * fk
        k += 1
    return TruncatedSeries(out)


def gcd_transform_checks(f, N: int, m: int = 2) -> dict:
    """First mismatch index (``None`` when equal) of each displayed GCD identity and its readings."""
    f = as_function(f)
    lam = lambda F: lambert(F, N)
    ogf = lambda F: TruncatedSeries([ZERO] + [F(n) for n in range(1, N + 1)])
    rhs1 = mobius_denominator_series(f, N)
    rhs2 = mobius_denominator_series(f, N, m=m)
    rhs2_scaled = mobius_denominator_series(f, N, m=m, scale=m)
    chain = [
        lam(gcd_sum(f)),
        lam(convolve(f, builtin("phi"), N).as_function()),
        sum((binomial_expansion(n, 2, N, shift=n) * f(n) for n in range(1, N + 1)), TruncatedSeries.zero(N)),
        ogf(ArithmeticFunction(lambda n: sum((sum((f(e) for e in divisors(gcd(k, n))), ZERO)
                                              for k in range(1, n + 1)), ZERO))),
    ]
    out = {
        "coprime": lam(coprime_sum(f)).first_difference(rhs1),
        "coprime_ogf": ogf(coprime_sum(f)).first_difference(rhs1),
        "gcd_eq_m": lam(gcd_restricted_sum(f, m)).first_difference(rhs2),
        "gcd_eq_m_ogf": ogf(gcd_restricted_sum(f, m)).first_difference(rhs2),
        "gcd_eq_m_ogf_scaled": ogf(gcd_restricted_sum(f, m)).first_difference(rhs2_scaled),
    }
    for i in range(1, len(chain)):
        out[f"chain{i}"] = chain[0].first_difference(chain[i])
    return out


# Kamp's generalized totients

def phi_a(a: int) -> ArithmeticFunction:
    """``phi_a(n) = sum_{d|(a,n)} d phi(n/d)``."""
    return ArithmeticFunction(lambda n: sum(d * totient(n // d) for d in divisors(gcd(a, n))), f"phi_{a}")


def _dnum(n: int) -> int:
    return len(divisors(n))


def kamp_numerator_minus(a: int, N: int) -> TruncatedSeries:
    """``sum_{k=1}^{2a} (a - |k-a|) d(gcd(a - |k-a|, a)) q^k``."""
    c = [ZERO] * (N + 1)
    for k in range(1, min(2 * a, N) + 1):
        t = a - abs(k - a)
        c[k] = t * _dnum(gcd(t, a))
    return TruncatedSeries(c)


def kamp_numerator_plus(a: int, N: int, weight: int = 1) -> TruncatedSeries:
    """``p[a](q)`` with the Iverson bracket for even ``k``; ``weight`` scales the bracketed term."""
    c = [ZERO] * (N + 1)
    for k in range(1, min(4 * a, N) + 1):
        t = 2 * a - abs(k - 2 * a)
        v = t * _dnum(gcd(t, a))
        if k % 2 == 0:
            u = a - abs(k // 2 - a)
            v -= weight * u * _dnum(gcd(u, a))
        c[k] = v
    return TruncatedSeries(c)


def kamp_identities(a: int, N: int) -> dict:
    """First mismatch for the ``1 - q^n`` and ``1 + q^n`` forms (``None`` means exact agreement)."""
    if a < 1:
        raise ValueError("a must be >= 1")
    f = phi_a(a)
    minus = kamp_numerator_minus(a, N) * binomial_expansion(a, 2, N)
    plus = kamp_numerator_plus(a, N) * binomial_expansion(2 * a, 2, N)
    plus2 = kamp_numerator_plus(a, N, weight=2) * binomial_expansion(2 * a, 2, N)
    hat = series(LambertSpec(f, sign="plus"), N)
    return {
        "minus": lambert(f, N).first_difference(minus),
        "plus": hat.first_difference(plus),
        "plus_weight2": hat.first_difference(plus2),
    }


# LCM sums

def lcm_sum(n: int, m: int = 1) -> int:
    """``sum_{k<=n} lcm(k, n)^m``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(_lcm(k, n) ** m for k in range(1, n + 1))


def lcm_function(m: int = 1) -> ArithmeticFunction:
    return ArithmeticFunction(lambda n: lcm_sum(n, m), f"lcmsum{m}")


def lcm_first_rhs_coefficient(n: int):
    """``(1/2)(sigma_1(n) + sum_{d|n} sum_{r|n/d} d sigma_2(d) mu(n/(dr)) (n/(dr))^2)``."""
    s = ZERO
    for d in divisors(n):
        for r in divisors(n // d):
            e = n // (d * r)
            s += d * sigma(2, d) * mobius(e) * e * e
    return normalize(Fraction(sigma(1, n) + s, 2))


def lcm_power_rhs_coefficient(n: int, m: int, b1=Fraction(-1, 2)):
    """``sigma_m(n) + sum_i C(m+1,i) B_{m+1-i}/(m+1) (1*Id_m*Id_{m+i}*Id_{2m}^{-1})(n)``.

    ``b1`` fixes the convention for ``B_1``.
    """
    inv2m = inverse_recursive(lambda k: k ** (2 * m), n)
    total = Fraction(sigma(m, n))
    for i in range(1, m + 2):
        j = m + 1 - i
        B = Fraction(b1) if j == 1 else bernoulli(j)
        if not B:
            continue
        conv = convolve(convolve(convolve(lambda k: 1, lambda k: k**m, n), lambda k: k ** (m + i), n), inv2m, n)
        total += comb(m + 1, i) * B / (m + 1) * conv[n]
    return normalize(total)


def lcm_f1(reading: str = "inner") -> Callable[[int], Callable]:
    """``f_1 = (1/2)(Id_1 * Id_2^{-1} . (Id_2 + Id_3))`` under three readings.

    ``inner``: ``Id_1 * (Id_2^{-1} . (Id_2 + Id_3))``; ``outer``: ``(Id_1 * Id_2^{-1}) . (Id_2 + Id_3)``;
    ``conv``: the dot read as a third Dirichlet convolution.
    """
    def build(N: int):
        inv = inverse_recursive(lambda k: k * k, N)
        if reading == "conv":
            vals = convolve(convolve(lambda k: k, inv, N), lambda k: k**2 + k**3, N)
        elif reading == "inner":
            vals = convolve(lambda k: k, lambda k: inv[k] * (k**2 + k**3), N)
        elif reading == "outer":
            c = convolve(lambda k: k, inv, N)
            vals = [c[k] * (k**2 + k**3) for k in range(1, N + 1)]
            return [Fraction(v, 2) for v in vals]
        else:
            raise ValueError(f"unknown reading {reading!r}")
        return [Fraction(v) / 2 for v in vals]
    return build


def lcm_f2_values(m: int, N: int, b1=Fraction(-1, 2)) -> list:
    """``f_2 = Id_m + sum_i C(m+1,i) B_{m+1-i}/(m+1) (Id_m * Id_{m+i} * Id_{2m}^{-1})`` on ``1..N``."""
    inv2m = inverse_recursive(lambda k: k ** (2 * m), N)
    vals = [Fraction(k**m) for k in range(1, N + 1)]
    for i in range(1, m + 2):
        j = m + 1 - i
        B = Fraction(b1) if j == 1 else bernoulli(j)
        if not B:
            continue
        conv = convolve(convolve(lambda k: k**m, lambda k: k ** (m + i), N), inv2m, N)
        for k in range(1, N + 1):
            vals[k - 1] += comb(m + 1, i) * B / (m + 1) * conv[k]
    return vals


def lcm_identity_checks(m_power: int, N: int) -> dict:
    """First mismatches for the two LCM identities and the ``f_1``/``f_2`` forms."""
    first = lambert(lcm_function(1), N)
    rhs1 = TruncatedSeries([ZERO] + [lcm_first_rhs_coefficient(n) for n in range(1, N + 1)])
    power = lambert(lcm_function(m_power), N)
    out = {"first": first.first_difference(rhs1)}
    for name in ("inner", "outer", "conv"):
        vals = lcm_f1(name)(N)
        out[f"f1_{name}"] = first.first_difference(lambert(lambda k: vals[k - 1], N))
    for tag, b1 in (("minus", Fraction(-1, 2)), ("plus", Fraction(1, 2))):
        coeffs = [lcm_power_rhs_coefficient(n, m_power, b1) for n in range(1, N + 1)]
        at_n = TruncatedSeries([ZERO] + coeffs)
        at_m = TruncatedSeries.zero(N)
        if m_power <= N:
            at_m = TruncatedSeries.monomial(m_power, N, sum(coeffs, ZERO))
        f2 = lcm_f2_values(m_power, N, b1)
        out[f"power_q^n_B1{tag}"] = power.first_difference(at_n)
        out[f"power_q^m_B1{tag}"] = power.first_difference(at_m)
        out[f"f2_B1{tag}"] = power.first_difference(lambert(lambda k: f2[k - 1], N))
    return out


# Hadamard products and h_{a,b}

def root_average(F: TruncatedSeries, d: int) -> TruncatedSeries:
    """``(1/d) sum_{m<d} F(w_d^m q)``, i.e. the residue-0 multisection."""
    return multisect(F, d, 0)


def hadamard_product_lambert(h, f, N: int) -> TruncatedSeries:
    """``sum_d ((h*mu)(d)/d) sum_{m<d} L_f(w_d^m q)``, realized by multisection."""
    hm = convolve(h, mobius, N)
    L = lambert(f, N)
    out = TruncatedSeries.zero(N)
    for d in range(1, N + 1):
        if hm[d]:
            out = out + root_average(L, d) * hm[d]
    return out


def hadamard_convolution_rhs(f, g, h, N: int) -> TruncatedSeries:
    """``sum_d sum_k f(d) h(dk) g(k) q^(dk) / (1 - q^(dk))``."""
    out = [ZERO] * (N + 1)
    for d in range(1, N + 1):
        fd = f(d)
        if not fd:
            continue
        for k in range(1, N // d + 1):
            w = fd * h(d * k) * g(k)
            if w:
                for e in range(d * k, N + 1, d * k):
                    out[e] += w
    return TruncatedSeries(out)


def h_ab(a: int, b: int, f, g) -> ArithmeticFunction:
    """``h_{a,b}(f, g; n) = sum_{d^a | n} f(n/d^a) g(n/d^b)``."""
    if not 1 <= b <= a:
        raise ValueError("need 1 <= b <= a")
    f, g = as_function(f), as_function(g)

    def h(n: int):
        s = ZERO
        d = 1
        while d**a <= n:
            if n % d**a == 0:
                s += f(n // d**a) * g(n // d**b)
            d += 1
        return s

    return ArithmeticFunction(h, f"h_{a},{b}")


def h_ab_sum(a: int, b: int, f, g, n: int):
    return normalize(h_ab(a, b, f, g)(n))


def hat_lambert(f, a: int, N: int) -> TruncatedSeries:
    """``sum_n f(n) q^(n^a) / (1 - q^(n^a))``."""
    f = as_function(f)
    out = [ZERO] * (N + 1)
    n = 1
    while n**a <= N:
        fn = f(n)
        if fn:
            for e in range(n**a, N + 1, n**a):
                out[e] += fn
        n += 1
    return TruncatedSeries(out)


def h_ab_multisection_rhs(a: int, b: int, f, g, N: int) -> TruncatedSeries:
    """``sum_d (sum_{r|d} g(r^(a-b)) mu(d/r)) (1/d) sum_m Lhat_{f,a}(w_d^m q)``."""
    g = as_function(g)
    L = hat_lambert(f, a, N)
    out = TruncatedSeries.zero(N)
    for d in range(1, N + 1):
        w = sum((g(r ** (a - b)) * mobius(d // r) for r in divisors(d)), ZERO)
        if w:
            out = out + root_average(L, d) * w
    return out


def mu_k_direct(k: int, n: int) -> int:
    """``mu_k`` from ``mu_k = h_{k,1}(mu_{k-1}, mu_{k-1}; .)`` with ``mu_1 = mu``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return mobius(n)
    prev = ArithmeticFunction(lambda m: mu_k_direct(k - 1, m), f"mu_{k-1}")
    return h_ab(k, 1, prev, prev)(n)


# prime products and sums

def prime_sum(F) -> ArithmeticFunction:
    """``n -> sum_{p|n} F(p)``."""
    F = as_function(F)
    return ArithmeticFunction(lambda n: sum((F(p) for p in factor(n)), ZERO), "psum")


def prime_product(F) -> ArithmeticFunction:
    """``n -> prod_{p|n} F(p)``."""
    F = as_function(F)

    def prod(n: int):
        out = ONE
        for p in factor(n):
            out = out * F(p)
        return out

    return ArithmeticFunction(prod, "pprod")


def divisor_sum_function(F) -> ArithmeticFunction:
    """``n -> sum_{d|n} F(d)``."""
    F = as_function(F)
    return ArithmeticFunction(lambda n: sum((F(d) for d in divisors(n)), ZERO), "dsum")


def prime_log_divisor_sums(n: int, f=None, k: int = 2) -> dict:
    """Each prime-log divisor-sum identity evaluated at ``n``: name -> ``(lhs, rhs)``.

    Values live in the log-linear domain.  ``f`` defaults to ``Id_1``.
    """
    from .arith import builtin as B
    f = B("id", 1) if f is None else as_function(f)
    mu, absmu = B("mu"), B("absmu")
    logn, lograd, ident = B("logn"), B("lograd"), B("id", 1)
    ds = lambda F: divisor_sum_function(F)(n)
    ps = lambda F: prime_sum(F)(n)
    pp = lambda F: prime_product(F)(n)
    w = omega(n)
    rad = B("rad")(n)
    out = {
        "mu_omega": (ds(mu * B("omega") * f), pp(1 - f) * ps(f / (f - 1))),
        "absmu_omega": (ds(absmu * B("omega") * f), pp(1 + f) * ps(f / (1 + f))),
        "mu_log_over_id": (ds(mu * logn / ident), Fraction(totient(n), n) * ps(logn / (1 - ident))),
        "absmu_log_over_idk": (ds(absmu * logn / B("id", k)), B("dedekind", k)(n) / Fraction(n**k)
                               * ps(logn / (B("id", k) + 1))),
        "absmu_log_over_phi": (ds(absmu * logn / B("phi")), Fraction(n, totient(n)) * ps(logn / ident)),
        "mu_log_over_d": (ds(mu * logn / B("d")), -(2**w) * lograd(n)),
        "mu_sigma_log": (ds(mu * B("sigma", 1) * logn), (-1) ** w * rad * (lograd(n) + ps(logn / ident))),
        "absmu_kpow": (ds(absmu * B("cpow_omega", k)), (k + 1) ** w),
    }
    for e in (1, 2):
        me = mu if e == 1 else absmu
        s = (-1) ** e
        out[f"mu{e}_dk_log"] = (ds(me * B("dk", k) * logn),
                                (1 + s * k) ** w * Fraction(k, k + s) * lograd(n))
        out[f"mu{e}_f_log"] = (ds(me * f * logn), pp(1 + s * f) * ps(f * logn / (f + s)))
    return out
