from fractions import Fraction

import pytest

from lambertkit import factorization as fz
from lambertkit.arith import builtin
from lambertkit.harness import bench as bm
import oracles as o


@pytest.mark.parametrize("strategy", bm.STRATEGIES)
def test_each_route_gives_sigma(strategy):
    assert bm.divisor_sums(builtin("id", 1), 60, strategy) == [o.sigma(1, n) for n in range(1, 61)]


@pytest.mark.parametrize("strategy", bm.STRATEGIES)
def test_rational_and_signed_functions(strategy):
    f = builtin("mu") + builtin("id", 1) / 3
    want = [sum(f(d) for d in o.divisors(n)) for n in range(1, 31)]
    assert bm.divisor_sums(f, 30, strategy) == want
    assert isinstance(bm.divisor_sums(f, 30, strategy)[0], Fraction)


def test_pentagonal_route_matches_library_recurrence():
    f = builtin("phi")
    assert bm.divisor_sums(f, 80, "pentagonal") == fz.pentagonal_table(f, 80)[1:]


def test_euler_coefficients():
    assert list(bm.euler_coefficients(12)) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_bench_rows_and_skip():
    rows = bm.bench([1, 500, 30_000])
    assert [(r.N, r.strategy) for r in rows][:3] == [(1, "naive"), (1, "sieve"), (1, "pentagonal")]
    assert all(r.agree for r in rows if r.N <= 500)
    skipped = [r.strategy for r in rows if r.N == 30_000 and r.seconds is None]
    assert skipped == ["naive", "pentagonal"]


def test_bench_rejects_bad_size():
    with pytest.raises(ValueError):
        bm.bench([0])


def test_large_values_fall_back_to_exact_objects():
    f = builtin("id", 3)
    got = bm.divisor_sums(f, 2000, "sieve")
    assert got[-1] == o.sigma(3, 2000)
