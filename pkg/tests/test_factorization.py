import pytest

from lambertkit import factorization as fz
from lambertkit import lambert as lm
from lambertkit.arith import builtin
from lambertkit.fps import TruncatedSeries, pochhammer
import oracles as o


def test_triangle_matches_signed_distinct_partition_counts():
    tri = fz.s_triangle("minus", 1, 0, 18)
    for n in range(1, 19):
        for k in range(1, n + 1):
            assert tri.entry(n, k) == o.signed_part_count(n, k), (n, k)


def test_closed_form_inverse_is_exact_inverse():
    s = fz.s_triangle("minus", 1, 0, 30)
    inv = fz.s_inverse_closed(30)
    assert s.matmul(inv).is_identity()
    assert inv.matmul(s).is_identity()
    assert s.inverse() == inv


@pytest.mark.parametrize("name", ["one", "mu", "phi", "vonmangoldt"])
def test_classical_factorization_reproduces_lambert(name):
    f = builtin(name)
    assert fz.classical_factorization(f, 24) == lm.lambert(f, 24)


def test_plus_sign_factorization():
    f = builtin("id", 1)
    assert fz.classical_factorization(f, 20, sign="plus") == lm.modified(f, 20)


@pytest.mark.parametrize("name", ["one", "mu"])
def test_generalized_factorization_2_1(name):
    f = builtin(name)
    assert fz.generalized_factorization(f, 2, 1, 24) == lm.generalized(f, 2, 1, 24)


def test_generalized_factorization_id():
    f = builtin("id", 1)
    assert fz.generalized_factorization(f, 2, 1, 24) == lm.generalized(f, 2, 1, 24)


def test_pentagonal_recurrence_gives_sigma():
    table = fz.pentagonal_table(builtin("id", 1), 100)
    assert table[1:] == [o.sigma(1, n) for n in range(1, 101)]
    assert fz.pentagonal_recurrence(builtin("one"), 11) == len(o.divisors(12))


def test_gamma_choice_changes_the_triangle():
    euler = pochhammer(1, 1, None, 20)
    with_mu = fz.custom_inverse(euler, builtin("mu"), 20)
    with_eps = fz.custom_inverse(euler, builtin("eps"), 20)
    # gamma = mu recovers the classical closed-form inverse, gamma = eps does not
    assert with_mu == fz.s_inverse_closed(20)
    assert with_eps != with_mu
    # ... yet both pairs still factor L_f, since f~ absorbs gamma
    f = builtin("phi")
    for g in ("mu", "eps", "one"):
        assert fz.custom_factorization(f, euler, builtin(g), 20) == lm.lambert(f, 20)


def test_singular_triangle():
    C = TruncatedSeries.constant(1, 6)
    with pytest.raises(fz.SingularTriangleError):
        fz.custom_pair(C, builtin("id", 1) - 1, 6)
    with pytest.raises(ValueError):
        fz.custom_inverse(TruncatedSeries.zero(6), builtin("mu"), 6)


def test_bad_triangle_parameters():
    with pytest.raises(ValueError):
        fz.s_triangle("times", 1, 0, 5)
    with pytest.raises(ValueError):
        fz.s_triangle("minus", 1, 0, 5, kind="odd")
