"""Brute-force reference implementations used as test oracles.

Nothing here imports lambertkit; every value is computed from definitions
by trial division or exhaustive enumeration.
"""
from fractions import Fraction
from math import gcd, isqrt


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mu(n):
    f = factor(n)
    return 0 if any(e > 1 for e in f.values()) else (-1) ** len(f)


def phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def sigma(k, n):
    return sum(d**k for d in divisors(n))


def liouville(n):
    return (-1) ** sum(factor(n).values())


def is_square(n):
    return isqrt(n) ** 2 == n


def series_mul(a, b):
    N = min(len(a), len(b))
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(N)]


def lambert_expand(f, N, power=1):
    """``sum_k f(k) q^k / (1 - q^k)^power`` by explicit geometric products."""
    out = [Fraction(0)] * (N + 1)
    for k in range(1, N + 1):
        geo = [Fraction(1) if j % k == 0 else Fraction(0) for j in range(N + 1)]
        term = [Fraction(0)] * (N + 1)
        term[k] = Fraction(f(k))
        for _ in range(power):
            term = series_mul(term, geo)
        out = [x + y for x, y in zip(out, term)]
    return out


def partitions(n, largest=None):
    """All partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in partitions(n - first, first)]
    return out


def distinct_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in distinct_partitions(n - first, first - 1)]
    return out


def signed_part_count(n, k):
    """``s_o(n, k) - s_e(n, k)``: occurrences of ``k`` in partitions of ``n``
    into distinct parts, counted +1 for an odd and -1 for an even number of parts."""
    return sum((1 if len(p) % 2 else -1) for p in distinct_partitions(n) if k in p)


def lattice_r2(n):
    r = isqrt(n)
    return sum(1 for x in range(-r, r + 1) for y in range(-r, r + 1) if x * x + y * y == n)
