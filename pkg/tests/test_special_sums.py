from math import gcd

import pytest

from lambertkit import special_sums as ss
from lambertkit.arith import builtin as B
from lambertkit.dirichlet import convolve
from lambertkit.fps import TruncatedSeries
from lambertkit.lambert import lambert

S = ss.ApostolSpec


def test_apostol_sum_definitions():
    spec = S("S1", B("id", 1), B("mu"), 6)  # Ramanujan sum c_6(n)
    assert [ss.apostol_sum(spec, n) for n in range(1, 7)] == [1, -1, -2, -1, 1, 2]
    with pytest.raises(ValueError):
        S("S3", B("one"), B("one"), 2)


def test_first_apostol_identity_fails_as_printed():
    for f, g, m in [(B("id", 1), B("mu"), 6), (B("one"), B("one"), 1), (B("phi"), B("id", 1), 4)]:
        assert ss.apostol_lambert_check(S("S1", f, g, m), 40)["mismatch"] is not None


def test_first_apostol_identity_reading():
    # the right side is the Lambert series over (f*g) supported on divisors of m
    f, g, m, N = B("id", 1), B("mu"), 6, 40
    fg = convolve(f, g, m)
    h = lambda n: fg[n] if m % n == 0 else 0
    assert lambert(h, N) == ss.apostol_s1_rhs(f, g, m, N)


@pytest.mark.parametrize("f,a", [("id", 4), ("phi", 6), ("mu", 12)])
def test_second_apostol_identity_with_g_one(f, a):
    fn = B("id", 1) if f == "id" else B(f)
    assert ss.apostol_lambert_check(S("S2", fn, B("one"), a), 40)["mismatch"] is None


def test_second_apostol_identity_general_g():
    f, g, a = B("id", 1), B("mu"), 6
    lhs = lambert(ss.apostol_function(S("S2", f, g, a)), 40)
    assert lhs.first_difference(ss.apostol_s2_rhs(f, g, a, 40)) == 2
    assert lhs == ss.apostol_s2_rhs(f, g, a, 40, corrected=True)


def test_fourier_readings():
    spec = S("S1", B("one"), B("id", 1), 6)
    assert ss.fourier_reconstruction_error(spec, "modulus") < 1e-9
    assert ss.fourier_reconstruction_error(spec, "printed") > 1
    assert ss.fourier_reconstruction_error(spec, "indexed") > 1
    # for Ramanujan sums (f = Id_1, g = mu) the k-indexed coefficients work
    assert ss.fourier_reconstruction_error(S("S1", B("id", 1), B("mu"), 4), "indexed") < 1e-9


def test_hecke_relations():
    for alpha in (0, 1, 2, 3):
        assert ss.hecke_sigma_check(alpha, 30) is None
    assert ss.hecke_tau_check(12) is None


def test_completely_multiplicative_relation():
    assert ss.completely_multiplicative_check(B("id", 1), B("id", 1), 30) == (2, 2)
    assert ss.completely_multiplicative_check(B("sigma", 1), B("id", 1), 30) is None


def test_gcd_transforms():
    got = ss.gcd_transform_checks(B("id", 1), 40)
    assert got["coprime"] == 2 and got["coprime_ogf"] is None
    assert got["gcd_eq_m"] == 1 and got["gcd_eq_m_ogf"] == 1 and got["gcd_eq_m_ogf_scaled"] is None
    assert got["chain1"] is got["chain2"] is got["chain3"] is None


def test_gcd_sum_definition():
    f = B("id", 1)
    g = ss.gcd_sum(f)
    assert all(g(n) == sum(gcd(k, n) for k in range(1, n + 1)) for n in range(1, 30))


@pytest.mark.parametrize("a", range(1, 7))
def test_kamp_identities(a):
    got = ss.kamp_identities(a, 60)
    assert got["minus"] is None
    assert got["plus"] is not None
    assert got["plus_weight2"] is None


def test_phi_a():
    assert [ss.phi_a(1)(n) for n in range(1, 10)] == [B("phi")(n) for n in range(1, 10)]


def test_lcm_sums():
    assert [ss.lcm_sum(n) for n in range(1, 6)] == [1, 4, 12, 24, 55]
    got = ss.lcm_identity_checks(2, 30)
    assert got["first"] is None
    assert got["f1_conv"] is None and got["f1_inner"] is not None
    assert got["power_q^n_B1minus"] is None and got["power_q^m_B1minus"] is not None
    assert got["f2_B1minus"] is None and got["f2_B1plus"] is not None


def test_hadamard_forms():
    f, h = B("phi"), B("omega")
    want = TruncatedSeries([0] + [h(n) * n for n in range(1, 41)])  # h (phi * 1) = h Id
    assert ss.hadamard_product_lambert(h, f, 40) == want
    assert ss.hadamard_convolution_rhs(f, B("mu"), h, 40) == lambert(h * convolve(f, B("mu"), 40).as_function(), 40)


def test_h_ab_and_hat_lambert():
    # mu_2 from the two-fold recurrence equals h_{2,1}(mu, mu)
    h = ss.h_ab(2, 1, B("mu"), B("mu"))
    assert all(h(n) == ss.mu_k_direct(2, n) for n in range(1, 80))
    assert ss.hat_lambert(B("one"), 2, 30) == TruncatedSeries(
        [0] + [sum(1 for d in range(1, 6) if n % (d * d) == 0) for n in range(1, 31)])


def test_prime_log_divisor_sums():
    bad = {}
    for n in range(1, 301):
        for name, (lhs, rhs) in ss.prime_log_divisor_sums(n).items():
            if lhs != rhs:
                bad.setdefault(name, n)
    assert bad == {"mu_log_over_d": 2}


def test_prime_log_with_other_test_functions():
    for f in (B("id", 2), B("id", 1), 1 / B("id", 1)):
        for n in range(1, 120):
            got = ss.prime_log_divisor_sums(n, f=f, k=3)
            for name in ("mu_omega", "absmu_omega", "mu1_f_log", "mu2_f_log", "absmu_kpow", "mu1_dk_log"):
                lhs, rhs = got[name]
                assert lhs == rhs, (name, n)


def test_cyclotomic_reconstruction():
    for n in (1, 6, 12):
        assert ss.phi_tilde_reconstruction(n, 36) == TruncatedSeries.geometric(n, 36)
