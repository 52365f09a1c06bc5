"""Builders whose value is a truncated power series."""
from __future__ import annotations

from fractions import Fraction

from .. import factorization as fz
from .. import lambert as lm
from .. import qseries as qs
from .. import special_sums as ss
from ..fps import ZERO, DomainError, TruncatedSeries, binomial_expansion, compose_power, pochhammer
from .registry import builder
from .values import LogQSeries, as_fn, as_int, as_scalar, as_series, as_word

_SIGNS = ("minus", "plus")


def _sign(s) -> str:
    return as_word(s, _SIGNS, "sign")


# -- Lambert series ----------------------------------------------------------

@builder()
def b_lambert(f, sign=None, *, order):
    """``sum f(n) q^n / (1 -+ q^n)``."""
    s = "minus" if sign is None else _sign(sign)
    return lm.series(lm.LambertSpec(as_fn(f), sign=s), order)


@builder()
def b_modlambert(f, *, order):
    """``sum f(n) q^n / (1 + q^n)``, built two ways and cross-checked."""
    return lm.modified(as_fn(f), order)


@builder()
def b_glambert(f, alpha, beta, *, order):
    """``sum f(n) q^(alpha n - beta) / (1 - q^(alpha n - beta))``."""
    return lm.generalized(as_fn(f), as_int(alpha), as_int(beta), order)


@builder()
def b_lsum(f, m=1, k=0, t=1, sign=None, *, order):
    """``sum_{n>=t} f(n) q^(m n) / (1 -+ q^n)^(k+1)``."""
    s = "minus" if sign is None else _sign(sign)
    spec = lm.LambertSpec(as_fn(f), sign=s, power=as_int(k) + 1, m=as_int(m), t=as_int(t))
    return lm.series(spec, order)


@builder()
def b_lsfrac(f, a, b, c, d, sign=None, start=1, *, order):
    """``sum_{n>=start} f(n) q^(a n + b) / (1 -+ q^(c n + d))``."""
    z = 1 if sign is None or _sign(sign) == "minus" else -1
    return lm.fraction_series(as_fn(f), (as_int(a), as_int(b)), (as_int(c), as_int(d)), order,
                              sign=z, start=as_int(start))


@builder()
def b_powlambert(f, k, *, order):
    """``sum f(n) q^(n^k) / (1 - q^(n^k))``."""
    return lm.power_argument(as_fn(f), as_int(k), order)


@builder()
def b_hatlambert(f, a, *, order):
    """Same series as ``powlambert``, built by the special-sums module."""
    return ss.hat_lambert(as_fn(f), as_int(a), order)


@builder()
def b_ogf(f, start=1, *, order):
    """``sum_{n>=start} f(n) q^n``."""
    return TruncatedSeries.from_function(as_fn(f), order, as_int(start))


@builder()
def b_dilsum(f, E, *, order):
    """``sum_{n>=1} f(n) E(q^n)`` for ``E(0) = 0``."""
    return lm.dilation_sum(as_fn(f), as_series(E, order), order)


@builder()
def b_sumsubst(E, a=1, b=0, *, order):
    """``sum_{n>=1} E(q^(a n - b))`` for ``E(0) = 0``."""
    E = as_series(E, order)
    a, b = as_int(a), as_int(b)
    if a < 1:
        raise DomainError("sumsubst needs a >= 1")
    if E[0]:
        raise DomainError("sumsubst needs a series without constant term")
    out = TruncatedSeries.zero(E.order)
    n = 1
    while a * n - b <= E.order:
        e = a * n - b
        if e < 1:
            raise DomainError(f"exponent {e} at n={n} is not positive")
        out = out + compose_power(E, e)
        n += 1
    return out


@builder()
def b_stirlingsum(f, k, *, order):
    """``sum_j S(k,j) j! sum_m f(m) q^(m j) / (1 - q^m)^(j+1)``."""
    return lm.stirling_lambert(as_fn(f), as_int(k), order)


@builder()
def b_stirlingcoef(f, k, reading=None, *, order):
    """Coefficient form with ``C(floor(n/j)/d + j, j)`` weights; ``corrected`` uses ``C(n/d, j)``."""
    fixed = reading is not None and as_word(reading, ("printed", "corrected"), "reading") == "corrected"
    return lm.stirling_lambert_printed_coefficients(as_fn(f), as_int(k), order, corrected=fixed)


@builder()
def b_qdpow(E, j, *, order):
    """``q^j D^j E``."""
    return as_series(E, order).q_derivative_power(as_int(j))


@builder()
def b_dstirling(i, j, form, *, order):
    """Stirling-number forms of ``q^j D^j [q^i/(1-q^i)]``; ``form`` 1, 2 or 3."""
    return lm.printed_derivative_form(as_int(i), as_int(j), order, variant=as_int(form))


@builder()
def b_dexpand(i, j, *, order):
    """``q^j D^j [q^i/(1-q^i)]`` by the verified Stirling expansion."""
    return lm.derivative_expansion(as_int(i), as_int(j), order)


@builder()
def b_rnested(*, order):
    """``sum_n q^n/(1-q^n)^2 sum_{k<=n} 1/(1-q^k)``."""
    return lm.ramanujan_nested_sum(order)


@builder()
def b_powsum(k, start=1, *, order):
    """``sum_{m>=start} q^(m^k)``."""
    k = as_int(k)
    if k < 1:
        raise DomainError("powsum needs k >= 1")
    return lm.pow_sum(k, order, as_int(start))


@builder()
def b_powersof(a, *, order):
    """``sum_{n>=0} q^(a^n)``."""
    a = as_int(a)
    if a < 1:
        raise DomainError("powersof needs a >= 1")
    return lm.powers_of(a, order)


# -- fps primitives ----------------------------------------------------------

@builder()
def b_subst(E, k, *, order):
    """``E(q^k)``."""
    return compose_power(as_series(E, order), as_int(k))


@builder()
def b_log(E, *, order):
    """Formal logarithm of a series with constant term 1."""
    return as_series(E, order).log()


@builder()
def b_exp(E, *, order):
    """Formal exponential of a series with constant term 0."""
    return as_series(E, order).exp()


@builder()
def b_multisect(E, d, r=0, *, order):
    """Coefficients of ``E`` at indices ``= r (mod d)``."""
    return as_series(E, order).multisect(as_int(d), as_int(r))


@builder()
def b_poch(a, step, z=1, *, order):
    """``(z q^a; q^step)_infinity``."""
    return pochhammer(as_int(a), as_int(step), None, order, z=as_scalar(z))


@builder()
def b_pochn(a, step, count, z=1, *, order):
    """``(z q^a; q^step)_count``."""
    return pochhammer(as_int(a), as_int(step), as_int(count), order, z=as_scalar(z))


@builder()
def b_etaq(k, *, order):
    """``(q^k; q^k)_infinity``."""
    k = as_int(k)
    return pochhammer(k, k, None, order)


@builder()
def b_geom(e, power=1, shift=0, z=1, *, order):
    """``z``-twisted ``q^shift / (1 - z q^e)^power``."""
    return binomial_expansion(as_int(e), as_int(power), order, z=as_scalar(z), shift=as_int(shift))


@builder()
def b_psi(k, x, *, order):
    """q-digamma ``psi_{q^k}(x)`` as ``-log(1-q^k) + log(q^k) sum_{n>=0} q^(k(n+x))/(1-q^(k(n+x)))``."""
    k, x = as_int(k), Fraction(as_scalar(x))
    start = k * x
    if k < 1 or start.denominator != 1 or start < 1:
        raise DomainError("psi needs k >= 1 and k*x a positive integer")
    start = int(start)
    a = -(1 - TruncatedSeries.monomial(k, order)).log()
    b = TruncatedSeries.zero(order)
    e = start
    while e <= order:
        b = b + TruncatedSeries.geometric(e, order, numerator_shift=e)
        e += k
    return LogQSeries(a, b * k)


# -- factorization theorems --------------------------------------------------

@builder()
def b_facsum(sign, f, *, order):
    """``sum_n (sum_k s_{n,k} f(k)) q^n`` for the classical triangle of the given sign."""
    tri = fz.s_triangle(_sign(sign), 1, 0, order)
    t = tri.apply(as_fn(f))
    return TruncatedSeries([ZERO] + list(t.values))


@builder()
def b_sinvapply(E, *, order):
    """Closed-form inverse triangle applied to the coefficients ``E_1..E_N``."""
    E = as_series(E, order)
    t = fz.s_inverse_closed(E.order).apply(lambda k: E[k])
    return TruncatedSeries([ZERO] + list(t.values))


@builder()
def b_custom(C, gamma, f, *, order):
    """``(1/C) sum_n (sum_k s_{n,k}(gamma) f~(k)) q^n``."""
    return fz.custom_factorization(as_fn(f), as_series(C, order), as_fn(gamma), order)


@builder()
def b_genfac(f, alpha, beta, kind=None, *, order):
    """Generalized ``(alpha, beta)`` factorization; ``kind`` distinct or unrestricted."""
    k = "distinct" if kind is None else as_word(kind, ("distinct", "unrestricted"), "kind")
    return fz.generalized_factorization(as_fn(f), as_int(alpha), as_int(beta), order, k)


@builder()
def b_abarsum(a, alpha, beta, C, gamma, reading=None, *, order):
    """``(1/C) sum_n (sum_k sbar_{n,k} abar_k) q^n``; ``reading`` printed or shifted."""
    r = "printed" if reading is None else as_word(reading, ("printed", "shifted"), "reading")
    return fz.abar_expansion(as_fn(a), as_int(alpha), as_int(beta), as_series(C, order), as_fn(gamma), order, r)


# -- q-series ----------------------------------------------------------------

@builder()
def b_theta(kind, *, order):
    """``theta_3`` or ``theta_4``."""
    return qs.theta(as_int(kind), order)


@builder()
def b_theta2sq(k, *, order):
    """``theta_2(q^k)^2`` (integral exponents only for even ``k``)."""
    return qs.theta2_squared(as_int(k), order)


_MOCK = {"mphi": "phi", "mpsi": "psi", "mrho": "rho", "msigma": "sigma", "mgamma": "gamma"}


@builder()
def b_mockl(name, variant=None, *, order):
    """Eulerian (q-hypergeometric) side of a sixth-order mock theta function."""
    nm = _MOCK[as_word(name, tuple(_MOCK), "mock theta name")]
    v = "printed" if variant is None else as_word(variant, ("printed", "shifted"), "variant")
    return qs.mock_eulerian(nm, order, v)


@builder()
def b_mockr(name, variant=None, *, order):
    """Bilateral-sum side of a sixth-order mock theta function."""
    nm = _MOCK[as_word(name, tuple(_MOCK), "mock theta name")]
    v = "printed" if variant is None else as_word(variant, ("printed", "alternating"), "variant")
    return qs.mock_bilateral(nm, order, v)


@builder()
def b_appell(xs, xe, zs, ze, *, order):
    """Appell-Lerch sum ``m(xs q^xe, q^3, zs q^ze)``."""
    return qs.appell_lerch((as_int(xs), as_int(xe)), (as_int(zs), as_int(ze)), order)


# -- special sums --------------------------------------------------------------

@builder()
def b_phitilde(n, *, order):
    """``sum_{d|n} d mu(n/d) / (1 - q^d)``."""
    return ss.cyclotomic_phi_tilde(as_int(n), order)


@builder()
def b_phitilderecon(n, *, order):
    """``(1/n) sum_{d|n} phitilde(d)``."""
    return ss.phi_tilde_reconstruction(as_int(n), order)


@builder()
def b_apostol1rhs(f, g, m, *, order):
    """``sum_n (f*g*1)(gcd(m, n)) q^n``."""
    return ss.apostol_s1_rhs(as_fn(f), as_fn(g), as_int(m), order)


@builder()
def b_apostol2rhs(f, g, a, reading=None, *, order):
    """``sum_m (sum_{d|(a,m)} sum_{r|m/d} f(d) g(a r)) q^m``; ``corrected`` uses ``g(a r/d)``."""
    r = "printed" if reading is None else as_word(reading, ("printed", "corrected"), "reading")
    return ss.apostol_s2_rhs(as_fn(f), as_fn(g), as_int(a), order, corrected=r == "corrected")


@builder()
def b_mobden(f, m=1, scale=1, *, order):
    """``sum_k (sum_{d|k} mu(d)/(1 - q^(m d))) f(scale k) q^(scale k)``."""
    return ss.mobius_denominator_series(as_fn(f), order, as_int(m), as_int(scale))


@builder()
def b_kampnum(a, *, order):
    """Numerator polynomial of the ``1 - q^n`` form."""
    return ss.kamp_numerator_minus(as_int(a), order)


@builder()
def b_kamppoly(a, weight=1, *, order):
    """``p[a](q)`` with the Iverson-bracket term scaled by ``weight``."""
    return ss.kamp_numerator_plus(as_int(a), order, as_int(weight))


@builder()
def b_lcmpowrhs(m, reading=None, *, order):
    """LCM power-sum right side; ``reading`` atm (single ``q^m``) or atn (``q^n``)."""
    m = as_int(m)
    r = "atm" if reading is None else as_word(reading, ("atm", "atn"), "reading")
    coeffs = [ss.lcm_power_rhs_coefficient(n, m) for n in range(1, order + 1)]
    if r == "atn":
        return TruncatedSeries([ZERO] + coeffs)
    return TruncatedSeries.monomial(m, order, sum(coeffs, ZERO))


@builder()
def b_hadamard(h, f, *, order):
    """``sum_d (h*mu)(d) multisect_d(L_f)``, the exact root-of-unity form."""
    return ss.hadamard_product_lambert(as_fn(h), as_fn(f), order)


@builder()
def b_h2rhs(f, g, h, *, order):
    """``sum_d sum_k f(d) h(dk) g(k) q^(dk) / (1 - q^(dk))``."""
    return ss.hadamard_convolution_rhs(as_fn(f), as_fn(g), as_fn(h), order)


@builder()
def b_habrhs(a, b, f, g, *, order):
    """Multisection right side for ``L`` over ``h_{a,b}(f, g)``."""
    return ss.h_ab_multisection_rhs(as_int(a), as_int(b), as_fn(f), as_fn(g), order)


@builder()
def b_lsqsum(f, *, order):
    """``sum_d sum_n mu(n) f(n d^2) q^(n d^2) / (1 - q^(n d^2))``."""
    f = as_fn(f)
    from ..arith import mobius
    c = [ZERO] * (order + 1)
    d = 1
    while d * d <= order:
        for n in range(1, order // (d * d) + 1):
            e = n * d * d
            w = mobius(n) * f(e)
            if w:
                for k in range(e, order + 1, e):
                    c[k] += w
        d += 1
    return TruncatedSeries(c)


@builder()
def b_xinvrhs(f, *, order):
    """``sum_n [(1 - f(n)/f(1))^Omega(n) - 1] L_f(q^n) / (f(1) f(n))``."""
    from ..arith import bigomega
    f = as_fn(f)
    f1 = f(1)
    w = lambda n: ((1 - f(n) / f1) ** bigomega(n) - 1) / (f1 * f(n))
    return lm.dilation_sum(w, lm.lambert(f, order), order)


@builder()
def b_linogf(f, a, b, *, order):
    """``sum_{n>=1} f(n) q^(a n + b)``."""
    f, a, b = as_fn(f), as_int(a), as_int(b)
    if a < 1:
        raise DomainError("linogf needs a >= 1")
    c = [ZERO] * (order + 1)
    n = 1
    while a * n + b <= order:
        e = a * n + b
        if e < 0:
            raise DomainError(f"negative exponent {e} at n={n}")
        c[e] += f(n)
        n += 1
    return TruncatedSeries(c)
