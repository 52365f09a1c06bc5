"""Factorization sieve and the arithmetic functions used by the catalog."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from typing import Callable, Optional

import numpy as np

from .fps import ONE, ZERO, DomainError, LogLinear, normalize

DEFAULT_LIMIT = 10**6


class FactorSieve:
    """Smallest-prime-factor table for ``1..limit``."""

    def __init__(self, limit: int = DEFAULT_LIMIT):
        if limit < 1:
            raise ValueError("sieve limit must be positive")
        self.limit = limit
        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                tail = spf[p * p :: p]
                tail[tail == 0] = p
        idx = np.arange(limit + 1, dtype=np.int64)
        unset = spf == 0
        spf[unset] = idx[unset]
        self._spf = spf

    def spf(self, n: int) -> int:
        self._check(n)
        return int(self._spf[n])

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range 1..{self.limit}")

    def factor(self, n: int) -> dict[int, int]:
        self._check(n)
        out: dict[int, int] = {}
        spf = self._spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return out

    def is_prime(self, n: int) -> bool:
        return n >= 2 and self.spf(n) == n

    def primes(self, upto: Optional[int] = None) -> np.ndarray:
        upto = self.limit if upto is None else upto
        idx = np.arange(2, upto + 1)
        return idx[self._spf[2 : upto + 1] == idx]


_SIEVE: Optional[FactorSieve] = None


def default_sieve(limit: Optional[int] = None) -> FactorSieve:
    """Shared sieve, rebuilt larger when ``limit`` exceeds the current one."""
    global _SIEVE
    want = max(limit or 0, DEFAULT_LIMIT)
    if _SIEVE is None or _SIEVE.limit < want:
        _SIEVE = FactorSieve(want)
        _factor.cache_clear()
        divisors.cache_clear()
    return _SIEVE


def set_default_limit(limit: int) -> None:
    """Reconfigure the shared sieve size."""
    global DEFAULT_LIMIT, _SIEVE
    DEFAULT_LIMIT = limit
    _SIEVE = None
    _factor.cache_clear()
    divisors.cache_clear()


@lru_cache(maxsize=1 << 16)
def _factor(n: int) -> tuple:
    return tuple(default_sieve().factor(n).items())


def factor(n: int) -> dict[int, int]:
    """Canonical factorization ``{prime: exponent}``; ``factor(1) == {}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > default_sieve().limit:
        default_sieve(n)
    return dict(_factor(n))


@lru_cache(maxsize=1 << 16)
def divisors(n: int) -> tuple:
    divs = [1]
    for p, e in factor(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def omega(n: int) -> int:
    return len(factor(n))


def bigomega(n: int) -> int:
    return sum(factor(n).values())


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factor(n) == {n: 1}


# ---------------------------------------------------------------------------
# Arithmetic function objects
# ---------------------------------------------------------------------------


class ArithmeticFunction:
    """A memoized map ``n -> ExactValue`` defined for ``n >= 1``.

    Arithmetic operators act pointwise; Dirichlet convolution lives in
    :mod:`lambertkit.dirichlet`.
    """

    def __init__(self, func: Callable[[int], object], name: str = "f", multiplicative: bool = False):
        self._func = func
        self.name = name
        self.multiplicative = multiplicative
        self._memo: dict[int, object] = {}

    def __call__(self, n: int):
        try:
            return self._memo[n]
        except KeyError:
            pass
        if n < 1:
            raise ValueError(f"{self.name} is defined for n >= 1, got {n}")
        v = normalize(self._func(n))
        self._memo[n] = v
        return v

    def window(self, N: int) -> list:
        """Values ``[f(1), ..., f(N)]``."""
        return [self(n) for n in range(1, N + 1)]

    def __repr__(self) -> str:
        return f"<ArithmeticFunction {self.name}>"

    # pointwise algebra
    @staticmethod
    def _wrap(other) -> Optional["ArithmeticFunction"]:
        if isinstance(other, ArithmeticFunction):
            return other
        if isinstance(other, (int, Fraction, LogLinear)):
            v = normalize(other)
            return ArithmeticFunction(lambda n: v, str(v))
        return None

    def _binop(self, other, op, sym, swap=False):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        a, b = (o, self) if swap else (self, o)
        return ArithmeticFunction(lambda n: op(a(n), b(n)), f"({a.name}{sym}{b.name})")

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y, "+")

    def __radd__(self, other):
        return self._binop(other, lambda x, y: x + y, "+", swap=True)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y, "-")

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: x - y, "-", swap=True)

    def __mul__(self, other):
        return self._binop(other, lambda x, y: x * y, "*")

    def __rmul__(self, other):
        return self._binop(other, lambda x, y: x * y, "*", swap=True)

    def __truediv__(self, other):
        return self._binop(other, lambda x, y: x / y, "/")

    def __rtruediv__(self, other):
        return self._binop(other, lambda x, y: x / y, "/", swap=True)

    def __neg__(self):
        return ArithmeticFunction(lambda n: -self(n), f"-{self.name}")

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise DomainError("pointwise powers must be integers")
        return ArithmeticFunction(lambda n: self(n) ** k, f"{self.name}^{k}")


def as_function(f) -> ArithmeticFunction:
    if isinstance(f, ArithmeticFunction):
        return f
    if callable(f):
        return ArithmeticFunction(f, getattr(f, "__name__", "f"))
    raise TypeError(f"not an arithmetic function: {f!r}")


# ---------------------------------------------------------------------------
# Scalar number-theoretic helpers
# ---------------------------------------------------------------------------


def mobius(n: int) -> int:
    fac = factor(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    out = 1
    for p, e in factor(n).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def sigma(k: int, n: int) -> int:
    if k < 0:
        raise DomainError("sigma_k is implemented for integer k >= 0")
    out = 1
    for p, e in factor(n).items():
        if k == 0:
            out *= e + 1
        else:
            pk = p**k
            out *= (pk ** (e + 1) - 1) // (pk - 1)
    return out


def rad(n: int) -> int:
    out = 1
    for p in factor(n):
        out *= p
    return out


def ramanujan_c(q: int, x: int) -> int:
    """Ramanujan sum ``c_q(x) = sum_{d | (q, x)} d mu(q/d)``."""
    if q < 1 or x < 1:
        raise ValueError("ramanujan_c needs q, x >= 1")
    return sum(d * mobius(q // d) for d in divisors(gcd(q, x)))


_PARTITIONS = [1]


def _pentagonals(n: int):
    """Yield ``(sign, generalized pentagonal number)`` up to ``n``."""
    k = 1
    while True:
        sgn = 1 if k % 2 else -1
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            return
        yield sgn, g1
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            yield sgn, g2
        k += 1


def partition_p(n: int) -> int:
    """Number of partitions of ``n`` (0 for negative ``n``), via the pentagonal recurrence."""
    if n < 0:
        return 0
    while len(_PARTITIONS) <= n:
        m = len(_PARTITIONS)
        _PARTITIONS.append(sum(s * _PARTITIONS[m - g] for s, g in _pentagonals(m)))
    return _PARTITIONS[n]


def r2(n: int) -> int:
    """Representations of ``n`` as a sum of two squares (signs and order counted)."""
    if n < 1:
        raise ValueError("r2 needs n >= 1")
    return 4 * sum((1 if d % 4 == 1 else -1) for d in divisors(n) if d % 2)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("bernoulli needs n >= 0")
    if n == 0:
        return ONE
    return -sum(comb(n + 1, k) * bernoulli(k) for k in range(n)) / (n + 1)


def bernoulli_poly(k: int, x) -> Fraction:
    x = Fraction(x)
    return sum(comb(k, j) * bernoulli(j) * x ** (k - j) for j in range(k + 1))


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind (cycle counts)."""
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


_TAU: list[int] = [0]


def _extend_tau(N: int) -> None:
    eta = [0] * (N + 1)
    eta[0] = 1
    for s, g in _pentagonals(N):
        eta[g] += -s  # (q;q)_inf = 1 + sum -(sign) q^g with the recurrence sign flipped
    power = [1] + [0] * N
    base = eta
    k = 24
    while k:
        if k & 1:
            power = _int_mul(power, base, N)
        k >>= 1
        if k:
            base = _int_mul(base, base, N)
    _TAU[:] = [0] + power[: N]


def _int_mul(a: list, b: list, N: int) -> list:
    out = [0] * (N + 1)
    nzb = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in nzb:
            if i + j > N:
                break
            out[i + j] += x * y
    return out


def ramanujan_tau(n: int) -> int:
    """Coefficient of ``q^n`` in ``q * (q;q)_inf^24``."""
    if n < 1:
        raise ValueError("tau needs n >= 1")
    if n >= len(_TAU):
        _extend_tau(max(2 * n, 64))
    return _TAU[n]


def log_int(n: int):
    return LogLinear.log(n, factor(n))


def mu_k(k: int, n: int):
    return _mu_k(k, n)


@lru_cache(maxsize=None)
def _mu_k(k: int, n: int) -> int:
    if k < 1:
        raise ValueError("mu_k needs k >= 1")
    if k == 1:
        return mobius(n)
    total = 0
    d = 1
    while d**k <= n:
        dk = d**k
        if n % dk == 0:
            total += _mu_k(k - 1, n // dk) * _mu_k(k - 1, n // d)
        d += 1
    return total


def is_kth_power(n: int, k: int) -> bool:
    return all(e % k == 0 for e in factor(n).values())


def prime_pi(x: int) -> int:
    if x < 2:
        return 0
    return int(len(default_sieve(x).primes(x)))


# ---------------------------------------------------------------------------
# Named builtins
# ---------------------------------------------------------------------------


def _mult(name: str, func) -> ArithmeticFunction:
    return ArithmeticFunction(func, name, multiplicative=True)


def _lambda_k(k: int) -> ArithmeticFunction:
    return ArithmeticFunction(
        lambda n: sum(mobius(n // d) for d in divisors(n) if is_kth_power(d, k)), f"lambda_{k}", True
    )


def _dk(k: int, n: int) -> int:
    out = 1
    for e in factor(n).values():
        out *= comb(e + k - 1, k - 1)
    return out


def _jordan(t: int, n: int) -> Fraction:
    out = Fraction(n) ** t
    for p in factor(n):
        out *= 1 - Fraction(1, p**t)
    return out


def _dedekind(k: int, n: int) -> Fraction:
    out = Fraction(n) ** k
    for p in factor(n):
        out *= 1 + Fraction(1, p**k)
    return out


def _totient_power(k: int, n: int) -> int:
    return sum(j**k for j in range(1, n + 1) if gcd(j, n) == 1)


_SIMPLE: dict[str, Callable[[], ArithmeticFunction]] = {
    "mu": lambda: _mult("mu", mobius),
    "phi": lambda: _mult("phi", totient),
    "liouville": lambda: _mult("liouville", lambda n: -1 if bigomega(n) % 2 else 1),
    "vonmangoldt": lambda: ArithmeticFunction(
        lambda n: LogLinear.log(next(iter(factor(n)))) if len(factor(n)) == 1 else 0, "vonmangoldt"
    ),
    "absmu": lambda: _mult("absmu", lambda n: abs(mobius(n))),
    "omega": lambda: ArithmeticFunction(omega, "omega"),
    "bigomega": lambda: ArithmeticFunction(bigomega, "bigomega"),
    "d": lambda: _mult("d", lambda n: sigma(0, n)),
    "two_omega": lambda: _mult("two_omega", lambda n: 2 ** omega(n)),
    "rad": lambda: _mult("rad", rad),
    "lsb": lambda: ArithmeticFunction(lambda n: n % 2, "lsb"),
    "chi_primes": lambda: ArithmeticFunction(lambda n: 1 if is_prime(n) else 0, "chi_primes"),
    "chi_squares": lambda: _mult("chi_squares", lambda n: 1 if is_kth_power(n, 2) else 0),
    "chi_squarefree": lambda: _mult("chi_squarefree", lambda n: abs(mobius(n))),
    "eps": lambda: _mult("eps", lambda n: 1 if n == 1 else 0),
    "one": lambda: _mult("one", lambda n: 1),
    "alt": lambda: ArithmeticFunction(lambda n: 1 if n % 2 else -1, "alt"),
    "logn": lambda: ArithmeticFunction(log_int, "logn"),
    "lograd": lambda: ArithmeticFunction(lambda n: log_int(rad(n)), "lograd"),
    "r2": lambda: ArithmeticFunction(r2, "r2"),
    "tau": lambda: ArithmeticFunction(ramanujan_tau, "tau", True),
    "partitions": lambda: ArithmeticFunction(partition_p, "partitions"),
    "primepi": lambda: ArithmeticFunction(prime_pi, "primepi"),
}

_PARAM: dict[str, Callable[..., ArithmeticFunction]] = {
    "sigma": lambda k: _mult(f"sigma_{k}", lambda n: sigma(k, n)),
    "id": lambda k: _mult(f"id_{k}", lambda n: Fraction(n) ** k),
    "jordan": lambda t: _mult(f"jordan_{t}", lambda n: _jordan(t, n)),
    "dk": lambda k: _mult(f"d_{k}", lambda n: _dk(k, n)),
    "dedekind": lambda k: _mult(f"dedekind_{k}", lambda n: _dedekind(k, n)),
    "lambda_k": _lambda_k,
    "mu_k": lambda k: ArithmeticFunction(lambda n: mu_k(k, n), f"mu_{k}"),
    "chi_kth": lambda k: _mult(f"chi_pow{k}", lambda n: 1 if is_kth_power(n, k) else 0),
    "cpow_omega": lambda c: _mult(f"{c}^omega", lambda n: Fraction(c) ** omega(n)),
    "geom": lambda a: ArithmeticFunction(lambda n: Fraction(a) ** n, f"{a}^n"),
    "totpow": lambda k: ArithmeticFunction(lambda n: _totient_power(k, n), f"phi_{k}"),
}


def builtin(name: str, *params) -> ArithmeticFunction:
    """Named arithmetic function, e.g. ``builtin("mu")`` or ``builtin("sigma", 2)``."""
    if name in _SIMPLE:
        if params:
            raise TypeError(f"{name} takes no parameters")
        return _SIMPLE[name]()
    if name in _PARAM:
        return _PARAM[name](*params)
    raise KeyError(f"unknown arithmetic function {name!r}")


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_SIMPLE)) + tuple(sorted(_PARAM))


def is_parametrized(name: str) -> bool:
    return name in _PARAM
