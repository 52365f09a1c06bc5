from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambertkit import lambert as lm
from lambertkit.arith import ArithmeticFunction, builtin
from lambertkit.dirichlet import convolve
from lambertkit.fps import TruncatedSeries, q
import oracles as o

N = 40


def test_classical_examples():
    assert lm.lambert(builtin("mu"), N) == q(N)
    assert lm.lambert(builtin("phi"), N) == q(N) * (1 - q(N)) ** -2
    assert list(lm.lambert(builtin("id", 2), N))[1:] == [o.sigma(2, n) for n in range(1, N + 1)]
    lam = lm.lambert(builtin("liouville"), N)
    assert all(lam[n] == (1 if o.is_square(n) else 0) for n in range(1, N + 1))


@pytest.mark.parametrize("power", [1, 2, 3])
def test_series_matches_geometric_products(power):
    f = builtin("sigma", 1)
    spec = lm.LambertSpec(f, power=power)
    assert list(lm.series(spec, 18)) == o.lambert_expand(f, 18, power)


spec_st = st.builds(
    lambda alpha, beta, sign, power, m, t: (alpha, beta % alpha, sign, power, m, t),
    st.integers(1, 4), st.integers(0, 3), st.sampled_from(["minus", "plus"]),
    st.integers(1, 3), st.integers(1, 3), st.integers(1, 3),
)
values_st = st.lists(st.fractions(-3, 3, max_denominator=4), min_size=60, max_size=60)


@settings(max_examples=60, deadline=None)
@given(spec_st, values_st)
def test_coefficient_formula_matches_series(params, values):
    f = ArithmeticFunction(lambda n: values[(n - 1) % len(values)], "table")
    spec = lm.LambertSpec(f, *params)
    s = lm.series(spec, 50)
    assert all(s[n] == lm.coefficient(spec, n) for n in range(1, 51))


def test_spec_validation():
    with pytest.raises(ValueError):
        lm.LambertSpec(builtin("one"), alpha=2, beta=2)
    with pytest.raises(ValueError):
        lm.LambertSpec(builtin("one"), sign="times")
    with pytest.raises(ValueError):
        lm.coefficient(lm.LambertSpec(builtin("one")), 0)


def test_modified_series_both_routes():
    s = lm.modified(builtin("phi"), 20)
    assert s == lm.series(lm.LambertSpec(builtin("phi"), sign="plus"), 20)
    # q (1 + q^2) / (1 - q^2)^2
    assert s == q(20) * (1 + q(20) ** 2) * (1 - q(20) ** 2) ** -2


def test_modified_h_readings_differ():
    f = builtin("id", 1)
    direct, recursive = lm.modified_h(f), lm.modified_h_recursive(f)
    assert [direct(n) for n in (1, 2, 3, 4)] == [1, 0, 3, 0]
    assert recursive(4) == 4 - 2 * recursive(2) == 4
    assert lm.lambert(direct, 30) == lm.modified(f, 30)


def test_power_argument_two_routes():
    f = builtin("mu")
    for k in (1, 2, 3):
        assert lm.power_argument(f, k, 60) == lm.power_divisor_sums(f, k, 60)


def test_dilation_sum_is_convolution():
    f, g = builtin("phi"), builtin("id", 1)
    h = convolve(f, g, N).as_function()
    assert lm.dilation_sum(f, lm.lambert(g, N), N) == lm.lambert(h, N)


def test_derivative_expansion_matches_direct_derivative():
    for i, j in [(1, 1), (2, 2), (3, 3)]:
        base = TruncatedSeries.geometric(i, 30, numerator_shift=i)
        assert lm.derivative_expansion(i, j, 30) == base.q_derivative_power(j)


def test_stirling_lambert_of_sigma_zero():
    # sum_j S(1, j) j! q^j / (1 - q)^{j+1} over f = eps gives the OGF of Id_1
    s = lm.stirling_lambert(builtin("eps"), 1, 12)
    assert list(s) == [0] + list(range(1, 13))


def test_ogf_from_lambert_inverts():
    f = builtin("tau")
    assert lm.ogf_from_lambert(f, 25) == lm.ogf(f, 25)
    assert lm.summatory_ogf(builtin("one"), 6) == TruncatedSeries([0, 1, 2, 3, 4, 5, 6])


def test_pow_sum_and_powers_of():
    assert [k for k, c in enumerate(lm.pow_sum(2, 50)) if c] == [1, 4, 9, 16, 25, 36, 49]
    assert [k for k, c in enumerate(lm.powers_of(3, 100)) if c] == [1, 3, 9, 27, 81]
    assert lm.powers_of(2, 8)[1] == Fraction(1)
