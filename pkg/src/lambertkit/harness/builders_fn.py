"""Builders whose value is an arithmetic function (or a single scalar)."""
from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from .. import dirichlet as dr
from .. import factorization as fz
from .. import lambert as lm
from .. import special_sums as ss
from ..arith import ArithmeticFunction, divisors
from ..fps import ZERO, DomainError, normalize
from .registry import builder
from .values import as_fn, as_int, as_scalar, as_word


def _window(values, name: str) -> ArithmeticFunction:
    w = dr.SequenceWindow(values)
    return ArithmeticFunction(w.__getitem__, name)


# -- Dirichlet algebra -------------------------------------------------------

@builder()
def b_conv(f, g, *, order):
    """Dirichlet convolution ``f * g`` on ``1..N``."""
    return _window(dr.convolve(as_fn(f), as_fn(g), order), "conv")


@builder()
def b_dinv(f, *, order):
    """Dirichlet inverse from the defining recursion."""
    return _window(dr.inverse_recursive(as_fn(f), order), "dinv")


@builder()
def b_dinvmousavi(f, variant=None, *, order):
    """Omega-indexed inverse formula over ``(f - f(1) eps)`` powers; ``boundary`` adds ``j = 0``."""
    b = variant is not None and as_word(variant, ("boundary",), "variant") == "boundary"
    return _window(dr.inverse_mousavi(as_fn(f), order, include_boundary=b), "dinvmousavi")


@builder()
def b_dinvbinom(f, variant=None, *, order):
    """Binomial inverse formula; ``shifted`` uses ``C(Omega+1, j+1)`` and sets ``n = 1`` to ``1/f(1)``."""
    s = variant is not None and as_word(variant, ("shifted",), "variant") == "shifted"
    return _window(dr.inverse_binomial(as_fn(f), order, shifted=s, include_boundary=s), "dinvbinom")


@builder()
def b_kfold(f, j, *, order):
    """``j``-fold Dirichlet power."""
    return _window(dr.kfold(as_fn(f), as_int(j), order), "kfold")


@builder()
def b_dilate(f, a):
    """``n -> f(a n)``."""
    f, a = as_fn(f), as_int(a)
    return ArithmeticFunction(lambda n: f(a * n), f"{f.name}({a}n)")


@builder()
def b_absf(f):
    """Pointwise absolute value of a rational-valued function."""
    f = as_fn(f)
    return ArithmeticFunction(lambda n: abs(f(n)), f"|{f.name}|")


@builder()
def b_summ(f):
    """Summatory function ``n -> sum_{k<=n} f(k)``."""
    f = as_fn(f)
    return ArithmeticFunction(lambda n: dr.summatory(f, n), "summ")


@builder()
def b_sigmaf(f):
    """``x -> sum_{n<=x} (f*1)(n)``."""
    f = as_fn(f)
    return ArithmeticFunction(lambda x: dr.sigma_f(f, x), "sigmaf")


@builder()
def b_dsum(F):
    """``n -> sum_{d|n} F(d)``."""
    return ss.divisor_sum_function(as_fn(F))


@builder()
def b_psum(F):
    """``n -> sum_{p|n} F(p)``."""
    return ss.prime_sum(as_fn(F))


@builder()
def b_pprod(F):
    """``n -> prod_{p|n} F(p)``."""
    return ss.prime_product(as_fn(F))


@builder()
def b_powdivsum(f, k):
    """``n -> sum_{d^k | n} f(d)``."""
    f, k = as_fn(f), as_int(k)

    def s(n):
        total, d = ZERO, 1
        while d**k <= n:
            if n % d**k == 0:
                total += f(d)
            d += 1
        return total

    return ArithmeticFunction(s, "powdivsum")


@builder()
def b_lcoef(f, alpha=1, beta=0, m=1, k=0, t=1, sign=None):
    """``n -> [q^n]`` of a Lambert-type series by the binomial divisor-sum formula."""
    s = "minus" if sign is None else as_word(sign, ("minus", "plus"), "sign")
    spec = lm.LambertSpec(as_fn(f), as_int(alpha), as_int(beta), s, as_int(k) + 1, as_int(m), as_int(t))
    return ArithmeticFunction(lambda n: lm.coefficient(spec, n), "lcoef")


@builder()
def b_modh(f, reading=None):
    """``h`` with ``L_h = L_f(q) - 2 L_f(q^2)``; ``printed`` is the self-referential form."""
    if reading is not None and as_word(reading, ("printed",), "reading") == "printed":
        return lm.modified_h_recursive(as_fn(f))
    return lm.modified_h(as_fn(f))


@builder()
def b_val(f, n):
    """The scalar ``f(n)``."""
    return as_fn(f)(as_int(n))


# -- factorization recurrences -----------------------------------------------

@builder()
def b_pentrec(f, *, order):
    """``n -> (f*1)(n)`` from the pentagonal recurrence."""
    return _window(fz.pentagonal_table(as_fn(f), order)[1:], "pentrec")


@builder()
def b_pentsum(f, n=None, *, order):
    """``x+1 -> Sigma_f(x+1)`` from the summatory recurrence; ``n`` fixes the free letter."""
    f = as_fn(f)
    free = None if n is None else as_int(n)
    return _window([fz.pentagonal_summatory(f, x, free) for x in range(order)], "pentsum")


# -- special sums ------------------------------------------------------------

@builder()
def b_partialcoef(f):
    """``x -> [q^x] sum_{n<=x} f(n) / (1 - q^n)``."""
    f = as_fn(f)
    return ArithmeticFunction(lambda x: sum((f(n) for n in range(1, x + 1) if x % n == 0), ZERO), "partialcoef")


@builder()
def b_ramcoef(f):
    """``x -> sum_{n<=x} (f(n)/n) sum_{d|n} c_d(x)``."""
    f = as_fn(f)
    return ArithmeticFunction(lambda x: ss.ramanujan_coefficient_formula(f, x), "ramcoef")


@builder()
def b_ramcoefmid(f):
    """``x -> sum_{d<=x} c_d(x) sum_{n<=x/d} f(nd)/(nd)``."""
    f = as_fn(f)
    return ArithmeticFunction(lambda x: ss.ramanujan_coefficient_middle(f, x), "ramcoefmid")


@builder()
def b_atgcd(F, m):
    """``n -> F(gcd(m, n))``."""
    F, m = as_fn(F), as_int(m)
    return ArithmeticFunction(lambda n: F(gcd(m, n)), "atgcd")


@builder()
def b_divides(m):
    """Indicator of ``n | m``."""
    m = as_int(m)
    return ArithmeticFunction(lambda n: 1 if m % n == 0 else 0, f"divides{m}")


@builder()
def b_coprimesum(f):
    """``n -> sum_{d<=n, (d,n)=1} f(d)``."""
    return ss.coprime_sum(as_fn(f))


@builder()
def b_gcdeq(f, m):
    """``n -> sum_{d<=n, (d,n)=m} f(d)``."""
    return ss.gcd_restricted_sum(as_fn(f), as_int(m))


@builder()
def b_gcdsum(f):
    """``n -> sum_{d<=n} f(gcd(d, n))``."""
    return ss.gcd_sum(as_fn(f))


@builder()
def b_phia(a):
    """``n -> sum_{d|(a,n)} d phi(n/d)``."""
    return ss.phi_a(as_int(a))


@builder()
def b_lcmsum(m=1):
    """``n -> sum_{k<=n} lcm(k, n)^m``."""
    return ss.lcm_function(as_int(m))


@builder()
def b_lcmrhs1():
    """Coefficients of the first LCM identity's right side."""
    return ArithmeticFunction(ss.lcm_first_rhs_coefficient, "lcmrhs1")


@builder()
def b_lcmf1(reading=None, *, order):
    """``f_1`` under the inner, outer or dirichlet grouping."""
    r = "inner" if reading is None else as_word(reading, ("inner", "outer", "dirichlet"), "reading")
    return _window(ss.lcm_f1("conv" if r == "dirichlet" else r)(order), "lcmf1")


@builder()
def b_lcmf2(m, *, order):
    """``f_2`` for the ``m``-th power LCM sum (``B_1 = -1/2``)."""
    return _window(ss.lcm_f2_values(as_int(m), order), "lcmf2")


@builder()
def b_apostol1(f, g, m):
    """``n -> sum_{d|(m,n)} f(d) g(m/d)``."""
    return ss.apostol_function(ss.ApostolSpec("S1", as_fn(f), as_fn(g), as_int(m)))


@builder()
def b_apostol2(f, g, a):
    """``n -> sum_{d|(a,n)} f(d) g(a n/d^2)``."""
    return ss.apostol_function(ss.ApostolSpec("S2", as_fn(f), as_fn(g), as_int(a)))


@builder()
def b_fourier1(f, g, m, reading=None):
    """``n -> sum_k a_k exp(2 pi i k n / m)``, evaluated in floating point and rounded to a rational.

    Raises when the value is not within ``1e-9`` of a rational with denominator at most ``10^6``.
    """
    r = "printed" if reading is None else as_word(reading, ("printed", "indexed", "modulus"), "reading")
    m = as_int(m)
    coeffs = ss.apostol_fourier(ss.ApostolSpec("S1", as_fn(f), as_fn(g), m), r)

    def value(n):
        z = sum(complex(float(a)) * cmath.exp(2j * cmath.pi * k * n / m) for k, a in enumerate(coeffs, start=1))
        x = Fraction(z.real).limit_denominator(10**6)
        if abs(z.imag) > 1e-9 or abs(z.real - float(x)) > 1e-9:
            raise DomainError(f"Fourier value at n={n} is not rational: {z}")
        return x

    return ArithmeticFunction(value, "fourier1")


@builder()
def b_hecke(F, g, m):
    """``n -> sum_{d|(m,n)} g(d) F(m n / d^2)``."""
    F, g, m = as_fn(F), as_fn(g), as_int(m)
    return ArithmeticFunction(lambda n: sum((g(d) * F(m * n // (d * d)) for d in divisors(gcd(m, n))), ZERO),
                              "hecke")


@builder()
def b_hab(a, b, f, g):
    """``n -> sum_{d^a | n} f(n/d^a) g(n/d^b)``."""
    return ss.h_ab(as_int(a), as_int(b), as_fn(f), as_fn(g))


@builder()
def b_const(c):
    """The constant function ``n -> c``."""
    c = normalize(as_scalar(c))
    return ArithmeticFunction(lambda n: c, str(c))


@builder()
def b_bernsum(k):
    """``m -> (B_{k+1}(m+1) - B_{k+1}(0)) / (k+1)``."""
    from ..arith import bernoulli_poly
    k = as_int(k)
    return ArithmeticFunction(lambda m: (bernoulli_poly(k + 1, m + 1) - bernoulli_poly(k + 1, 0)) / (k + 1),
                              "bernsum")
